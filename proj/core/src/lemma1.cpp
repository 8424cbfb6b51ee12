#include "bhseq/lemma1.hpp"

#include <algorithm>
#include <limits>

#include "bhseq/closed_forms.hpp"
#include "bhseq/errors.hpp"

namespace bhseq {
namespace {

using Wide = WideSigned;

std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("interval endpoint out of 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

IntegerInterval make(Wide lo, Wide hi) { return IntegerInterval(narrow(lo), narrow(hi)); }

Wide half(Wide numerator) {
    if (numerator % 2 != 0) throw_internal("interval formula: odd numerator");
    return numerator / 2;
}

void require_lemma1_order(unsigned h) {
    if (h < 2) throw InvalidInput("the blocked-interval construction needs h >= 2");
    // h^3-sized endpoints must stay comfortably inside int64
    if (h > 1'000'000) throw OverflowError("h too large for interval endpoints");
}

bool single(const std::vector<IntegerInterval>& merged, const IntegerInterval& expected) {
    return merged.size() == 1 && merged.front() == expected;
}

bool chained(const std::vector<IntegerInterval>& pieces) {
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (!pieces[i].joins(pieces[i + 1])) return false;
    }
    return true;
}

std::string tag(const char* name, unsigned y3) { return std::string(name) + "(y3=" + std::to_string(y3) + ")"; }

}  // namespace

std::vector<IntegerInterval> lemma1_witness_set(unsigned h) {
    require_lemma1_order(h);
    const Wide cap = upper_bound_sum(h, 4);
    const Wide second = Wide{h} + 1;
    const Wide third = Wide{h} * h + h + 1;

    std::vector<IntegerInterval> found;
    auto keep = [&](Wide lo, Wide hi) {
        lo = std::max<Wide>(lo, 1);
        hi = std::min(hi, cap);
        if (lo <= hi) found.push_back(make(lo, hi));
    };
    for (unsigned y3 = 0; y3 <= h; ++y3) {
        for (unsigned y2 = 0; y2 + y3 <= h; ++y2) {
            const Wide rhs_without_y1 = y2 * second + y3 * third;
            const unsigned y1_max = h - y2 - y3;
            // x2 * y2 = 0
            const unsigned x2_max = y2 > 0 ? 0 : h - 1;
            for (unsigned x2 = 0; x2 <= x2_max; ++x2) {
                const Wide base = rhs_without_y1 - x2 * second;
                const unsigned x1_max = h - 1 - x2;
                // x1 * y1 = 0: either y1 = 0 and x1 ranges, or x1 = 0 and y1 ranges
                keep(base - x1_max, base);
                keep(base, base + y1_max);
            }
        }
    }
    return merge_intervals(std::move(found));
}

bool Lemma1Family::all_claims_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const OverlapClaim& c) { return c.holds; });
}

Lemma1Family lemma1_interval_family(unsigned h) {
    require_lemma1_order(h);
    const Wide x = h;
    const Wide h2 = x * x;
    const Wide h3 = h2 * x;
    const Wide third = h2 + x + 1;
    const bool odd = h % 2 == 1;

    Lemma1Family fam;
    fam.h = h;
    auto add = [&](std::string label, const IntegerInterval& iv) { fam.intervals.push_back({std::move(label), iv}); };
    auto claim = [&](std::string label, bool holds) { fam.claims.push_back({std::move(label), holds}); };

    std::vector<IntegerInterval> big;  // I(1), ..., I(h)
    for (unsigned y3 = 1; y3 <= h; ++y3) {
        const Wide y = y3;
        const Wide center = y * third;

        std::vector<IntegerInterval> y_pieces;
        for (Wide y2 = 0; y2 <= x - y; ++y2) {
            y_pieces.push_back(make(center + y2 * (x + 1) - x + 1, center + y2 * x + x - y));
            add(tag("y-piece", y3) + "[y2=" + std::to_string(narrow(y2)) + "]", y_pieces.back());
        }
        const auto y_union = make(center - x + 1, y * h2 + h2 + x);
        add(tag("y-union", y3), y_union);
        claim(tag("y-pieces chain", y3), chained(y_pieces));
        claim(tag("y-pieces merge to y-union", y3), single(merge_intervals(y_pieces), y_union));

        std::vector<IntegerInterval> x_pieces;
        for (Wide x2 = 0; x2 <= x - y; ++x2) {
            x_pieces.push_back(make(center - x2 * x - x + 1, center - x2 * (x + 1) + x - y));
            add(tag("x-piece", y3) + "[x2=" + std::to_string(narrow(x2)) + "]", x_pieces.back());
        }
        // pieces run right to left as x2 grows
        std::reverse(x_pieces.begin(), x_pieces.end());
        const auto x_union = make(y * (h2 + 2 * x + 1) - h2 - x + 1, y * (h2 + x) + x);
        add(tag("x-union", y3), x_union);
        claim(tag("x-pieces chain", y3), chained(x_pieces));
        claim(tag("x-pieces merge to x-union", y3), single(merge_intervals(x_pieces), x_union));

        const auto iy = make(y * (h2 + 2 * x + 1) - h2 - x + 1, y * h2 + h2 + x);
        add(tag("I", y3), iy);
        claim(tag("x-union and y-union merge to I", y3), single(merge_intervals({x_union, y_union}), iy));
        big.push_back(iy);
    }

    fam.overlap_threshold = narrow((h2 - 1) / (2 * x + 1));
    fam.top = narrow(odd ? (x + 1) / 2 : x / 2);
    claim("threshold matches parity formula", fam.overlap_threshold == narrow(odd ? (x - 1) / 2 : (x - 2) / 2));
    for (unsigned y3 = 1; y3 < h; ++y3) {
        const bool joins = big[y3 - 1].joins(big[y3]);
        claim(tag("I(y3) joins I(y3+1) iff y3 <= threshold", y3), joins == (y3 <= fam.overlap_threshold));
    }

    const std::vector<IntegerInterval> chain(big.begin(), big.begin() + fam.top);
    const auto prefix = make(x + 2, odd ? half(h3 + 3 * h2 + 2 * x) : half(h3 + 2 * h2 + 2 * x));
    add(odd ? "prefix-union(odd)" : "prefix-union(even)", prefix);
    claim("I(1..top) merge to prefix-union", single(merge_intervals(chain), prefix));

    // One more x-side witness just past the prefix: y2 = 0 with y3, x2 fixed by parity.
    const Wide y3 = odd ? (x + 3) / 2 : (x + 2) / 2;
    const Wide x2 = odd ? (x + 1) / 2 : x / 2;
    const Wide center = y3 * third - x2 * (x + 1);
    const auto extra = make(center - (x - 1 - x2), center + (x - y3));
    const auto extra_formula = odd ? make(half(h3 + 3 * h2 + x + 5), half(h3 + 3 * h2 + 3 * x - 1))
                                   : make(half(h3 + 2 * h2 + x + 4), half(h3 + 2 * h2 + 3 * x));
    add(odd ? "extra(odd)" : "extra(even)", extra);
    claim("extra interval matches simplified endpoints", extra == extra_formula);
    claim("prefix-union joins extra", prefix.joins(extra));

    auto chain_plus = chain;
    chain_plus.push_back(extra);
    fam.merged_union = merge_intervals(std::move(chain_plus));

    std::vector<IntegerInterval> everything;
    everything.reserve(fam.intervals.size());
    for (const auto& li : fam.intervals) everything.push_back(li.interval);
    fam.full_union = merge_intervals(std::move(everything));
    return fam;
}

}  // namespace bhseq
