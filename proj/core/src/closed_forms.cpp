#include "bhseq/closed_forms.hpp"

#include <string>

#include "bhseq/representations.hpp"

namespace bhseq {
namespace {

// Halves a numerator that the formula guarantees to be even.
Element exact_half(Element numerator, const char* what) {
    if (numerator % 2 != 0) throw_internal(std::string(what) + ": odd numerator");
    return numerator / 2;
}

}  // namespace

QuasiPolynomialValue a4_quasi_polynomial(unsigned h) {
    require_order(h);
    const Element x = h;
    const Element h2 = checked::mul(x, x, "h^2");
    const Element h3 = checked::mul(h2, x, "h^3");
    QuasiPolynomialValue q;
    q.h = h;
    if (h % 2 == 1) {
        q.parity_branch = Parity::Odd;
        const Element num = checked::add(checked::add(h3, checked::mul(3, h2)), checked::add(checked::mul(3, x), 1),
                                         "a_4 numerator");
        q.value = exact_half(num, "a_4 odd branch");
    } else {
        q.parity_branch = Parity::Even;
        const Element num = checked::add(checked::add(h3, checked::mul(2, h2)), checked::add(checked::mul(3, x), 2),
                                         "a_4 numerator");
        q.value = exact_half(num, "a_4 even branch");
    }
    return q;
}

Element closed_form_term(unsigned h, unsigned k) {
    require_order(h);
    const Element x = h;
    switch (k) {
        case 0:
            return 0;
        case 1:
            return 1;
        case 2:
            return checked::add(x, 1, "h + 1");
        case 3:
            return checked::add(checked::mul(x, x, "h^2"), checked::add(x, 1), "h^2 + h + 1");
        case 4:
            return a4_quasi_polynomial(h).value;
        default:
            throw RangeError("no closed form for a_" + std::to_string(k) + "(h); only k <= 4 is known");
    }
}

Element a4_floor_form(unsigned h) {
    require_order(h);
    const Element x = h;
    const Element lead = (x + 3) / 2;
    const Element tail = checked::mul(3, x) / 2;
    return checked::add(checked::mul(lead, checked::mul(x, x, "h^2"), "floor form"), tail + 1, "floor form");
}

Element cap_H(unsigned h) {
    require_order(h);
    const Element x = h;
    const Element h2 = checked::mul(x, x, "h^2");
    if (h % 2 == 1) return exact_half(checked::add(h2, checked::add(checked::mul(2, x), 1)), "H odd branch");
    return exact_half(checked::add(h2, checked::add(x, 2)), "H even branch");
}

Element upper_bound_sum(unsigned h, unsigned k) {
    require_order(h);
    if (k == 0) throw InvalidInput("upper_bound_sum needs k >= 1");
    Element sum = 0;
    Element power = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (i) power = checked::mul(power, h, "h^i");
        sum = checked::add(sum, power, "bound sum");
    }
    if (h >= 2 && k >= 2) {
        // power == h^{k-1}; the comparison is done in 128 bits so a large
        // right-hand side cannot spuriously fail it.
        const WideUnsigned rhs =
            static_cast<WideUnsigned>(power) + 2 * static_cast<WideUnsigned>(power / h);
        if (!(sum < rhs)) throw_internal("bound sum is not below h^{k-1} + 2h^{k-2}");
    }
    return sum;
}

}  // namespace bhseq
