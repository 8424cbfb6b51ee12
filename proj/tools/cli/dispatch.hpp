#pragma once

#include <iosfwd>
#include <vector>

#include "cli/formats.hpp"

namespace bhseq::cli {

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,   // verification failed, rows mismatched, or a scan hit its cap
    kUsage = 2,     // bad flags or unreadable input
    kResource = 3,  // overflow or out of memory
};

/// Parses argv and runs one subcommand, writing the report to `out` and
/// diagnostics to `err`. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Theorem scan over [h_min, h_max]; rows come back in h order whatever the
/// number of jobs.
std::vector<TheoremRow> theorem_scan(unsigned h_min, unsigned h_max, unsigned jobs = 1);

}  // namespace bhseq::cli
