#pragma once

#include "bhseq/checked.hpp"

namespace bhseq {

enum class Parity { Odd, Even };

/// Value of the parity-branched formula for the fourth greedy term.
struct QuasiPolynomialValue {
    unsigned h = 1;
    Element value = 0;
    Parity parity_branch = Parity::Odd;
};

/// a_4(h): (h^3 + 3h^2 + 3h + 1) / 2 for odd h, (h^3 + 2h^2 + 3h + 2) / 2 for even h.
QuasiPolynomialValue a4_quasi_polynomial(unsigned h);

/// Closed form for the greedy term a_k(h), k in [0, 4]:
/// 0, 1, h + 1, h^2 + h + 1, then the quasi-polynomial above.
/// Throws RangeError for k > 4; no closed form is known there.
Element closed_form_term(unsigned h, unsigned k);

/// floor((h + 3) / 2) * h^2 + floor(3h / 2) + 1, equal to a_4(h).
Element a4_floor_form(unsigned h);

/// The constant H with a_4(h) = (h + 1) * H:
/// (h^2 + 2h + 1) / 2 for odd h, (h^2 + h + 2) / 2 for even h.
Element cap_H(unsigned h);

/// Σ_{i=0}^{k-1} h^i, an upper bound for a_k(h). For h, k >= 2 also checks the
/// strict bound Σ < h^{k-1} + 2h^{k-2} and throws InternalError if it fails.
Element upper_bound_sum(unsigned h, unsigned k);

}  // namespace bhseq
