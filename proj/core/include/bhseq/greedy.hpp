#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "bhseq/support_table.hpp"

namespace bhseq {

struct GreedyOptions {
    /// Worker threads for the candidate scan. 1 scans strictly in order.
    unsigned threads = 1;
    /// Candidates evaluated per parallel round; 0 picks 64 per thread.
    Element window = 0;
    BackendPolicy backend = BackendPolicy::Auto;
};

/// The greedy B_h construction in progress: terms a_0 = 0 < a_1 < ... and the
/// support table of exactly those terms.
class GreedyState {
public:
    explicit GreedyState(unsigned h, BackendPolicy backend = BackendPolicy::Auto);

    unsigned h() const noexcept { return table_.h(); }
    std::span<const Element> terms() const noexcept { return table_.ground_set(); }
    const SumSupportTable& table() const noexcept { return table_; }

    /// Finds the least b > max(terms) keeping the terms B_h, appends it and
    /// returns it. Earlier integers never need rechecking: each was a member or
    /// was rejected against a subset of the current terms, and a superset of a
    /// non-B_h set is not B_h.
    ///
    /// The scan stops at Σ_{i<k} h^i for the new index k. Running out is an
    /// InternalError since the greedy term provably lies below that bound.
    Element next_term(const GreedyOptions& options = {});

    /// Total candidates passed to `admissible` so far.
    std::uint64_t candidates_tested() const noexcept { return tested_; }

private:
    Element scan_sequential(Element from, Element cap);
    Element scan_parallel(Element from, Element cap, const GreedyOptions& options);

    SumSupportTable table_;
    std::uint64_t tested_ = 0;
};

/// A computed greedy prefix a_0..a_{k_max}.
struct SequenceRecord {
    unsigned h = 1;
    unsigned k_max = 0;
    std::vector<Element> terms;
    /// Scan cap Σ_{i<k_max} h^i used for the last term, 0 when k_max == 0.
    Element scan_cap = 0;
    /// Wall time spent on each term; elapsed[0] (the seed 0) is zero.
    std::vector<std::chrono::nanoseconds> elapsed;
};

SequenceRecord greedy_sequence(unsigned h, unsigned k, const GreedyOptions& options = {});

/// Reference greedy: every candidate is tested with the brute-force B_h
/// check on the whole extended set. Exponential in h; intended for h, k <= 6.
std::vector<Element> greedy_bruteforce_oracle(unsigned h, unsigned k);

/// First `count` terms of the Mian-Chowla sequence (1, 2, 4, 8, ...): start
/// at 1 and repeatedly take the least larger integer keeping the set Sidon.
/// Computed independently of the greedy engine, by brute force.
std::vector<Element> mian_chowla_prefix(std::size_t count);

}  // namespace bhseq
