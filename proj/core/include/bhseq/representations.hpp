#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhseq/checked.hpp"

namespace bhseq {

/// Sorts `values` and rejects empty input and duplicates with InvalidInput.
std::vector<Element> normalize_set(std::vector<Element> values);

/// Throws InvalidInput for h == 0.
void require_order(unsigned h);

/// A multiset of elements, stored non-decreasing. Non-decreasing h-tuples and
/// size-h multisets are the same objects, so representations are counted as
/// multisets throughout.
using Multiset = std::vector<Element>;

/// Two different size-h multisets with the same sum.
struct Collision {
    Multiset left;
    Multiset right;
    Element sum = 0;

    /// "0+2 = 1+1"
    std::string to_string() const;
};

/// Number of size-h multisets drawn from `set` whose elements sum to `n`.
/// Plain enumeration over combinations with repetition; this is the reference
/// the fast paths are tested against.
std::uint64_t count_representations(std::span<const Element> set, unsigned h, Element n);

/// First collision in lexicographic multiset order, if any.
std::optional<Collision> find_collision_bruteforce(std::span<const Element> set, unsigned h);

/// True iff every n has at most one representation as a sum of h elements.
bool is_bh_set_bruteforce(std::span<const Element> set, unsigned h);

}  // namespace bhseq
