#pragma once

#include <optional>
#include <string>

#include "bhseq/checked.hpp"

namespace bhseq {

/// Coefficients exhibiting a collision between a candidate c and the greedy
/// prefix {0, 1, h+1, h^2+h+1}:
///
///   x0*c + x1 + x2*(h+1) + x3*(h^2+h+1) = y1 + y2*(h+1) + y3*(h^2+h+1)
///
/// with x0 >= 1, x0+x1+x2+x3 <= h, y1+y2+y3 <= h and x1*y1 = x2*y2 = x3*y3 = 0.
/// Padding both sides with zeros gives two distinct size-h multisets over
/// {0, 1, h+1, h^2+h+1, c} with equal sums.
struct CollisionWitness {
    Element c = 0;
    unsigned x0 = 0, x1 = 0, x2 = 0, x3 = 0;
    unsigned y1 = 0, y2 = 0, y3 = 0;

    /// Re-checks every constraint and the equation itself for order h.
    bool satisfies(unsigned h) const;

    /// "x0=1 x1=0 x2=0 x3=0 y1=1 y2=0 y3=1"
    std::string to_string() const;

    friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;
};

/// Exhaustive search for a witness blocking c. Right-hand sides are tabulated
/// once; left-hand sides are enumerated in lexicographic (x0, x1, x2, x3) order
/// and the first disjoint match is returned.
std::optional<CollisionWitness> collision_witness(unsigned h, Element c);

/// True iff no witness blocks (h + 1) * cap_H(h), i.e. the candidate
/// a_4(h) survives the collision equation.
bool lemma2_check(unsigned h);

/// Least c > h^2 + h + 1 without a collision witness, found by scanning up to
/// Σ_{i<4} h^i. Requires h >= 2.
Element min_unblocked(unsigned h);

}  // namespace bhseq
