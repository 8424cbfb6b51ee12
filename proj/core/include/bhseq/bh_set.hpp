#pragma once

#include <span>
#include <vector>

#include "bhseq/checked.hpp"

namespace bhseq {

/// A finite, strictly increasing set of nonnegative integers that is known to
/// be a B_h-set. Instances only come out of `certify`.
class BhSet {
public:
    /// Sorts `values`, rejects duplicates, and checks the B_h property.
    /// Throws InvalidInput when the set is not B_h.
    static BhSet certify(std::vector<Element> values, unsigned h);

    /// True iff `values` (any order, no duplicates) is a B_h-set. Uses the
    /// support-table cardinality test on the set translated to start at 0;
    /// the B_h property is translation invariant.
    static bool check(std::vector<Element> values, unsigned h);

    unsigned h() const noexcept { return h_; }
    std::span<const Element> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    Element max() const noexcept { return elements_.back(); }

    friend bool operator==(const BhSet&, const BhSet&) = default;

private:
    BhSet(std::vector<Element> elements, unsigned h) : elements_(std::move(elements)), h_(h) {}

    std::vector<Element> elements_;
    unsigned h_;
};

}  // namespace bhseq
