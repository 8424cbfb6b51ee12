#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bhseq/errors.hpp"

namespace bhseq {

using Element = std::uint64_t;

/// 128-bit intermediates for comparisons that may exceed Element.
__extension__ typedef unsigned __int128 WideUnsigned;
__extension__ typedef __int128 WideSigned;

/// Overflow-checked arithmetic on Element. Every operation throws OverflowError
/// naming `what` when the exact result does not fit in 64 bits.
namespace checked {

inline Element add(Element a, Element b, std::string_view what = "sum") {
    Element r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError(std::string("overflow in ") + std::string(what));
    }
    return r;
}

inline Element mul(Element a, Element b, std::string_view what = "product") {
    Element r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError(std::string("overflow in ") + std::string(what));
    }
    return r;
}

inline Element sub(Element a, Element b, std::string_view what = "difference") {
    if (b > a) {
        throw OverflowError(std::string("negative result in ") + std::string(what));
    }
    return a - b;
}

inline Element pow(Element base, unsigned exp, std::string_view what = "power") {
    Element r = 1;
    for (unsigned i = 0; i < exp; ++i) r = mul(r, base, what);
    return r;
}

/// Non-throwing variants for search loops that prune on overflow.
inline std::optional<Element> try_add(Element a, Element b) {
    Element r;
    if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
    return r;
}

inline std::optional<Element> try_mul(Element a, Element b) {
    Element r;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

}  // namespace checked

/// C(n, k), or nullopt when the value exceeds 64 bits.
std::optional<Element> binomial(Element n, Element k);

}  // namespace bhseq
