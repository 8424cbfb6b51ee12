#include "bhseq/interval.hpp"

#include <algorithm>

#include "bhseq/errors.hpp"

namespace bhseq {

IntegerInterval::IntegerInterval(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (lo > hi) {
        throw InvalidInput("empty interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

bool IntegerInterval::joins(const IntegerInterval& other) const noexcept {
    // Half-open view: [lo, hi + 1) and [other.lo, other.hi + 1) touch or overlap.
    return lo_ <= other.hi_ + 1 && other.lo_ <= hi_ + 1;
}

std::string IntegerInterval::to_string() const {
    return "[" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]";
}

std::vector<IntegerInterval> merge_intervals(std::vector<IntegerInterval> intervals) {
    std::sort(intervals.begin(), intervals.end());
    std::vector<IntegerInterval> out;
    out.reserve(intervals.size());
    for (const auto& iv : intervals) {
        if (!out.empty() && out.back().joins(iv)) {
            out.back() = IntegerInterval(out.back().lo(), std::max(out.back().hi(), iv.hi()));
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

bool union_contains(std::span<const IntegerInterval> haystack, const IntegerInterval& needle) {
    auto it = std::upper_bound(haystack.begin(), haystack.end(), needle.lo(),
                               [](std::int64_t v, const IntegerInterval& iv) { return v < iv.lo(); });
    if (it == haystack.begin()) return false;
    return std::prev(it)->contains(needle);
}

}  // namespace bhseq
