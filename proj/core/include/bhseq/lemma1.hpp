#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhseq/interval.hpp"

namespace bhseq {

/// Every b in [1, Σ_{i<4} h^i] admitting
///
///   b + x1 + x2*(h+1) = y1 + y2*(h+1) + y3*(h^2+h+1)
///
/// for nonnegative x1 + x2 <= h - 1, y1 + y2 + y3 <= h, x1*y1 = x2*y2 = 0,
/// reported as merged intervals. Values up to h^2 + h + 1 are included but
/// carry no collision claim; the equation degenerates there. Requires h >= 2.
std::vector<IntegerInterval> lemma1_witness_set(unsigned h);

struct LabeledInterval {
    std::string label;
    IntegerInterval interval;
};

/// One adjacency or equality asserted while assembling the lower-bound
/// interval, and whether it held at this h.
struct OverlapClaim {
    std::string label;
    bool holds = false;
};

/// The blocked-candidate intervals, evaluated at a concrete h.
struct Lemma1Family {
    unsigned h = 2;
    /// In order: for each y3 in [1, h] the y-side pieces (one per y2), their
    /// union, the x-side pieces (one per x2), their union and I(y3); then the
    /// prefix union of I(1..top) and the parity-dependent extra interval.
    std::vector<LabeledInterval> intervals;
    /// floor((h^2 - 1) / (2h + 1)): I(y3) and I(y3+1) join iff y3 is at most this.
    std::int64_t overlap_threshold = 0;
    /// (h + 1) / 2 for odd h, h / 2 for even h.
    std::int64_t top = 0;
    std::vector<OverlapClaim> claims;
    /// Merge of I(1..top) and the extra interval; a single interval
    /// [h + 2, a_4(h) - 1] when the lower bound goes through.
    std::vector<IntegerInterval> merged_union;
    /// Merge of every listed interval.
    std::vector<IntegerInterval> full_union;

    bool all_claims_hold() const;
};

/// Builds the family by substituting h into each interval formula and checks
/// every claimed adjacency against the substituted endpoints. Requires h >= 2.
Lemma1Family lemma1_interval_family(unsigned h);

}  // namespace bhseq
