#include "bhseq/support_table.hpp"

#include <string>

#include "bhseq/representations.hpp"

namespace bhseq {
namespace {

Backend pick_backend(BackendPolicy policy, unsigned h, Element max_element) {
    switch (policy) {
        case BackendPolicy::Dense:
            return Backend::Dense;
        case BackendPolicy::Sparse:
            return Backend::Sparse;
        case BackendPolicy::Auto:
            break;
    }
    const auto top = checked::try_mul(h, max_element);
    return top && *top < kDenseBitLimit ? Backend::Dense : Backend::Sparse;
}

}  // namespace

std::size_t SumSupportTable::memory_bytes() const noexcept {
    std::size_t total = ground_.capacity() * sizeof(Element);
    for (const auto& s : supports_) total += s.memory_bytes();
    return total;
}

SumSupportTable build_general_support_table(std::span<const Element> set, unsigned h, BackendPolicy policy) {
    require_order(h);
    SumSupportTable t;
    t.h_ = h;
    t.ground_ = normalize_set({set.begin(), set.end()});
    // Every support value is bounded by h * max(A); checking it once keeps
    // the shifted unions below overflow-free.
    checked::mul(h, t.ground_.back(), "h * max(A)");

    const Backend backend = pick_backend(policy, h, t.ground_.back());
    t.supports_.reserve(h + 1);
    t.supports_.emplace_back(backend);
    t.supports_[0].insert(0);
    for (unsigned j = 1; j <= h; ++j) {
        MembershipSet next(backend, static_cast<std::size_t>(j) * t.ground_.back() + 1);
        for (Element a : t.ground_) next.union_shifted(t.supports_[j - 1], a);
        t.supports_.push_back(std::move(next));
    }
    return t;
}

SumSupportTable build_support_table(std::span<const Element> set, unsigned h, BackendPolicy policy) {
    auto t = build_general_support_table(set, h, policy);
    if (!t.contains_zero()) throw InvalidInput("support table requires 0 in the ground set");
    return t;
}

bool verify_by_cardinality(const SumSupportTable& table) {
    if (!table.contains_zero()) {
        throw InvalidInput("cardinality verification requires 0 in the ground set");
    }
    const auto expected = binomial(table.ground_set_size() + table.h() - 1, table.h());
    // |D_h| <= h * max(A) + 1 always fits, so an overflowing binomial cannot match.
    return expected && table.support(table.h()).size() == *expected;
}

// A ∪ {b} is B_h iff for every d in [1, h] the shifted set d*b + D_{h-d} misses D_h.
//
// (=>) Suppose two distinct size-h multisets over A ∪ {b} share a sum. Remove
// their common part. The remainders S', T' are disjoint, of equal size s <= h,
// and at most one of them contains b because A is B_h and b was cancelled if
// shared. Say S' holds b exactly d >= 1 times: d*b + σ(S'') = σ(T') with
// |S''| = s - d and |T'| = s over A. Zero-padding puts σ(S'') in D_{h-d} and
// σ(T') in D_h, so the shifted set meets D_h.
// (<=) A hit d*b + σ(S) = σ(T) with |S| = h - d, |T| = h over A gives the
// size-h multisets S + {b^d} and T. They differ (only one holds b) and share a
// sum, so A ∪ {b} is not B_h.
bool admissible(const SumSupportTable& table, Element b) {
    if (!table.contains_zero()) throw InvalidInput("admissible requires 0 in the ground set");
    if (b <= table.max_element()) {
        throw InvalidInput("candidate " + std::to_string(b) + " must exceed max(A) = " +
                           std::to_string(table.max_element()));
    }
    if (!verify_by_cardinality(table)) throw InvalidInput("admissible requires a B_h ground set");
    const unsigned h = table.h();
    checked::mul(h, b, "h * candidate");

    const MembershipSet& top = table.support(h);
    for (unsigned d = 1; d <= h; ++d) {
        if (top.intersects_shifted(table.support(h - d), static_cast<Element>(d) * b)) return false;
    }
    return true;
}

SumSupportTable insert_element(const SumSupportTable& table, Element b) {
    if (!admissible(table, b)) {
        throw InvalidInput("inserting " + std::to_string(b) + " would break the B_h property");
    }
    SumSupportTable t;
    t.h_ = table.h_;
    t.ground_ = table.ground_;
    t.ground_.push_back(b);
    // D'_j = D_j ∪ (b + D'_{j-1}): a j-multiset either avoids b or is b plus a
    // (j-1)-multiset of the extended set.
    t.supports_.reserve(table.supports_.size());
    t.supports_.push_back(table.supports_[0]);
    for (unsigned j = 1; j <= t.h_; ++j) {
        MembershipSet next = table.supports_[j];
        next.union_shifted(t.supports_[j - 1], b);
        t.supports_.push_back(std::move(next));
    }
    return t;
}

}  // namespace bhseq
