#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bhseq/membership_set.hpp"

namespace bhseq {

/// How a table picks the backend of its support sets.
enum class BackendPolicy {
    Auto,  ///< dense when h * max(A) + 1 <= kDenseBitLimit, sparse otherwise
    Dense,
    Sparse,
};

/// h-fold sumset supports D_0..D_h of a ground set A, where D_j holds every
/// sum of exactly j elements of A (repetition allowed).
///
/// Immutable once built; `insert_element` returns a new table. When 0 is in A,
/// padding with zeros gives D_j ⊆ D_{j+1}, which is what lets a single
/// comparison against D_h stand in for every smaller size.
class SumSupportTable {
public:
    unsigned h() const noexcept { return h_; }
    std::size_t ground_set_size() const noexcept { return ground_.size(); }
    std::span<const Element> ground_set() const noexcept { return ground_; }
    bool contains_zero() const noexcept { return !ground_.empty() && ground_.front() == 0; }
    Element max_element() const noexcept { return ground_.back(); }

    const MembershipSet& support(unsigned j) const { return supports_.at(j); }
    Backend backend() const noexcept { return supports_.back().backend(); }
    std::size_t memory_bytes() const noexcept;

    friend bool operator==(const SumSupportTable&, const SumSupportTable&) = default;

private:
    friend SumSupportTable build_support_table(std::span<const Element>, unsigned, BackendPolicy);
    friend SumSupportTable build_general_support_table(std::span<const Element>, unsigned, BackendPolicy);
    friend SumSupportTable insert_element(const SumSupportTable&, Element);

    unsigned h_ = 1;
    std::vector<Element> ground_;
    std::vector<MembershipSet> supports_;
};

/// Builds D_0..D_h from scratch via D_j = ⋃_{a ∈ A} (a + D_{j-1}).
/// Requires 0 ∈ A; unsorted input is sorted, duplicates are rejected.
SumSupportTable build_support_table(std::span<const Element> set, unsigned h,
                                    BackendPolicy policy = BackendPolicy::Auto);

/// Same construction without the 0 ∈ A requirement. Tables built this way
/// report contains_zero() == false and are refused by the fast verifiers.
SumSupportTable build_general_support_table(std::span<const Element> set, unsigned h,
                                            BackendPolicy policy = BackendPolicy::Auto);

/// |D_h| == C(m + h - 1, h). Equivalent to the brute-force B_h test for
/// ground sets containing 0.
bool verify_by_cardinality(const SumSupportTable& table);

/// True iff A ∪ {b} is a B_h-set, for a B_h-set A ∋ 0 and b > max(A).
bool admissible(const SumSupportTable& table, Element b);

/// Table for A ∪ {b}; requires admissible(table, b).
SumSupportTable insert_element(const SumSupportTable& table, Element b);

}  // namespace bhseq
