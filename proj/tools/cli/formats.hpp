#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bhseq/greedy.hpp"

namespace bhseq::cli {

/// OEIS b-file: one "index value" line per term, index starting at 0, each
/// line terminated by '\n'.
void emit_bfile(const SequenceRecord& record, std::ostream& out);

/// Reads a b-file back into its values. Blank lines and '#' comments are
/// skipped; indices must run 0, 1, 2, ... Throws InvalidInput otherwise.
std::vector<Element> read_bfile(std::istream& in);

/// {"h", "k", "offset", "terms", "cap", "elapsed_ms"}
nlohmann::ordered_json sequence_json(const SequenceRecord& record);

/// "# h=H offset=0" header, then "index,value" rows.
void emit_csv(const SequenceRecord& record, std::ostream& out);

/// Set file: ASCII, one nonnegative decimal integer per line; '#' starts a
/// comment, blank lines are ignored. The result is sorted; duplicates throw.
std::vector<Element> read_set(std::istream& in);

/// Inline set literal such as "{0,1,3,7}" or "0,1,3,7".
std::vector<Element> parse_set_literal(std::string_view text);

/// One row of the theorem scan.
struct TheoremRow {
    unsigned h = 1;
    Element a4_greedy = 0;
    Element a4_formula = 0;
    std::optional<Element> a4_witness;  // unset for h = 1
    bool match = false;
};

/// Column order is fixed: h, a4_greedy, a4_formula, a4_witness, match.
void emit_theorem_text(const std::vector<TheoremRow>& rows, std::ostream& out);
void emit_theorem_csv(const std::vector<TheoremRow>& rows, std::ostream& out);
nlohmann::ordered_json theorem_json(const std::vector<TheoremRow>& rows);

}  // namespace bhseq::cli
