#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bhseq {

/// Closed interval of integers [lo, hi] = { n : lo <= n <= hi }, lo <= hi.
/// Endpoints are signed: several formula intervals start below zero.
class IntegerInterval {
public:
    IntegerInterval(std::int64_t lo, std::int64_t hi);

    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return hi_; }
    std::uint64_t length() const noexcept { return static_cast<std::uint64_t>(hi_ - lo_) + 1; }

    bool contains(std::int64_t n) const noexcept { return lo_ <= n && n <= hi_; }
    bool contains(const IntegerInterval& other) const noexcept { return lo_ <= other.lo_ && other.hi_ <= hi_; }

    /// True when the union of the two is again an interval of integers, i.e.
    /// they share a point or sit side by side ([1,3] and [4,6]).
    bool joins(const IntegerInterval& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const IntegerInterval&, const IntegerInterval&) = default;
    friend auto operator<=>(const IntegerInterval&, const IntegerInterval&) = default;

private:
    std::int64_t lo_;
    std::int64_t hi_;
};

/// Sorted, pairwise disjoint, non-adjacent intervals covering the same
/// integers as the input.
std::vector<IntegerInterval> merge_intervals(std::vector<IntegerInterval> intervals);

/// True iff every integer of `needle` lies in the merged union `haystack`.
bool union_contains(std::span<const IntegerInterval> haystack, const IntegerInterval& needle);

}  // namespace bhseq
