#include "bhseq/witness.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "bhseq/closed_forms.hpp"
#include "bhseq/representations.hpp"

namespace bhseq {
namespace {

struct Weights {
    Element one = 1;
    Element second;  // h + 1
    Element third;   // h^2 + h + 1
    Element max_rhs;
};

Weights weights_for(unsigned h) {
    Weights w;
    w.second = closed_form_term(h, 2);
    w.third = closed_form_term(h, 3);
    w.max_rhs = checked::mul(h, w.third, "h * (h^2 + h + 1)");
    return w;
}

struct RhsEntry {
    Element value;
    std::array<unsigned, 3> y;

    friend auto operator<=>(const RhsEntry&, const RhsEntry&) = default;
};

std::vector<RhsEntry> tabulate_rhs(unsigned h, const Weights& w) {
    std::vector<RhsEntry> table;
    for (unsigned y1 = 0; y1 <= h; ++y1) {
        for (unsigned y2 = 0; y1 + y2 <= h; ++y2) {
            for (unsigned y3 = 0; y1 + y2 + y3 <= h; ++y3) {
                table.push_back({y1 + y2 * w.second + y3 * w.third, {y1, y2, y3}});
            }
        }
    }
    std::sort(table.begin(), table.end());
    return table;
}

class WitnessSearch {
public:
    explicit WitnessSearch(unsigned h) : h_(h), w_(weights_for(h)), rhs_(tabulate_rhs(h, w_)) {}

    std::optional<CollisionWitness> find(Element c) const;

private:
    unsigned h_;
    Weights w_;
    std::vector<RhsEntry> rhs_;
};

}  // namespace

bool CollisionWitness::satisfies(unsigned h) const {
    if (h == 0 || c == 0 || x0 < 1) return false;
    if (x0 + x1 + x2 + x3 > h || y1 + y2 + y3 > h) return false;
    if ((x1 && y1) || (x2 && y2) || (x3 && y3)) return false;
    const WideUnsigned second = static_cast<WideUnsigned>(h) + 1;
    const WideUnsigned third = static_cast<WideUnsigned>(h) * h + h + 1;
    const WideUnsigned lhs = static_cast<WideUnsigned>(x0) * c + x1 + x2 * second + x3 * third;
    const WideUnsigned rhs = y1 + y2 * second + y3 * third;
    return lhs == rhs;
}

std::string CollisionWitness::to_string() const {
    return "x0=" + std::to_string(x0) + " x1=" + std::to_string(x1) + " x2=" + std::to_string(x2) +
           " x3=" + std::to_string(x3) + " y1=" + std::to_string(y1) + " y2=" + std::to_string(y2) +
           " y3=" + std::to_string(y3);
}

std::optional<CollisionWitness> collision_witness(unsigned h, Element c) {
    return WitnessSearch(h).find(c);
}

std::optional<CollisionWitness> WitnessSearch::find(Element c) const {
    if (c == 0) throw InvalidInput("candidate must be positive");
    const unsigned h = h_;
    for (unsigned x0 = 1; x0 <= h; ++x0) {
        const auto base = checked::try_mul(x0, c);
        if (!base || *base > w_.max_rhs) break;
        for (unsigned x1 = 0; x0 + x1 <= h; ++x1) {
            for (unsigned x2 = 0; x0 + x1 + x2 <= h; ++x2) {
                for (unsigned x3 = 0; x0 + x1 + x2 + x3 <= h; ++x3) {
                    // base <= max_rhs keeps this sum far from 64-bit overflow
                    const Element lhs = *base + x1 + x2 * w_.second + x3 * w_.third;
                    if (lhs > w_.max_rhs) break;
                    auto it = std::lower_bound(rhs_.begin(), rhs_.end(), lhs,
                                               [](const RhsEntry& e, Element v) { return e.value < v; });
                    for (; it != rhs_.end() && it->value == lhs; ++it) {
                        const auto [y1, y2, y3] = it->y;
                        if ((x1 && y1) || (x2 && y2) || (x3 && y3)) continue;
                        CollisionWitness wit{c, x0, x1, x2, x3, y1, y2, y3};
                        if (!wit.satisfies(h)) throw_internal("witness failed re-check: " + wit.to_string());
                        return wit;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool lemma2_check(unsigned h) {
    const Element candidate = checked::mul(Element{h} + 1, cap_H(h), "(h + 1) * H");
    return !collision_witness(h, candidate).has_value();
}

Element min_unblocked(unsigned h) {
    if (h < 2) throw InvalidInput("min_unblocked is defined for h >= 2");
    const Element from = checked::add(closed_form_term(h, 3), 1);
    const Element cap = upper_bound_sum(h, 4);
    const WitnessSearch search(h);
    for (Element c = from; c <= cap; ++c) {
        if (!search.find(c)) return c;
    }
    throw_internal("cap exceeded: every candidate up to " + std::to_string(cap) + " is blocked");
}

}  // namespace bhseq
