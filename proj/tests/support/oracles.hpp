#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's table and search code.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace bhseq::testing {

/// All sums of exactly j elements of `a` (repetition allowed), by recursion.
inline std::set<std::uint64_t> sums_of_size(const std::vector<std::uint64_t>& a, unsigned j) {
    std::set<std::uint64_t> out;
    auto rec = [&](auto&& self, std::size_t from, unsigned left, std::uint64_t acc) -> void {
        if (left == 0) {
            out.insert(acc);
            return;
        }
        for (std::size_t i = from; i < a.size(); ++i) self(self, i, left - 1, acc + a[i]);
    };
    rec(rec, 0, j, 0);
    return out;
}

/// Representation counts of every sum of h elements of `a`.
inline std::map<std::uint64_t, std::uint64_t> representation_histogram(const std::vector<std::uint64_t>& a,
                                                                       unsigned h) {
    std::map<std::uint64_t, std::uint64_t> hist;
    auto rec = [&](auto&& self, std::size_t from, unsigned left, std::uint64_t acc) -> void {
        if (left == 0) {
            ++hist[acc];
            return;
        }
        for (std::size_t i = from; i < a.size(); ++i) self(self, i, left - 1, acc + a[i]);
    };
    rec(rec, 0, h, 0);
    return hist;
}

inline bool is_bh_by_histogram(const std::vector<std::uint64_t>& a, unsigned h) {
    for (const auto& [sum, count] : representation_histogram(a, h)) {
        if (count > 1) return false;
    }
    return true;
}

/// Random strictly increasing set containing 0, with at most `max_size`
/// elements drawn from [1, max_value].
inline std::vector<std::uint64_t> random_zero_set(std::mt19937_64& rng, std::size_t max_size,
                                                  std::uint64_t max_value) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<std::uint64_t> value_dist(1, max_value);
    std::set<std::uint64_t> s{0};
    const std::size_t target = size_dist(rng);
    while (s.size() < target) s.insert(value_dist(rng));
    return {s.begin(), s.end()};
}

}  // namespace bhseq::testing
