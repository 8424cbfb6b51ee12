#include <doctest.h>

#include <set>

#include "bhseq/closed_forms.hpp"
#include "bhseq/lemma1.hpp"
#include "bhseq/support_table.hpp"

using namespace bhseq;

namespace {

// Direct enumeration of the witness equation; no interval reasoning.
std::set<std::int64_t> witness_values(unsigned h) {
    const std::int64_t H = h;
    std::set<std::int64_t> out;
    for (std::int64_t y1 = 0; y1 <= H; ++y1)
        for (std::int64_t y2 = 0; y1 + y2 <= H; ++y2)
            for (std::int64_t y3 = 0; y1 + y2 + y3 <= H; ++y3)
                for (std::int64_t x1 = 0; x1 <= H - 1; ++x1)
                    for (std::int64_t x2 = 0; x1 + x2 <= H - 1; ++x2) {
                        if (x1 * y1 != 0 || x2 * y2 != 0) continue;
                        const std::int64_t b = y1 + y2 * (H + 1) + y3 * (H * H + H + 1) - x1 - x2 * (H + 1);
                        if (b >= 1) out.insert(b);
                    }
    return out;
}

std::set<std::int64_t> expand(const std::vector<IntegerInterval>& ivs) {
    std::set<std::int64_t> out;
    for (const auto& iv : ivs)
        for (auto n = iv.lo(); n <= iv.hi(); ++n) out.insert(n);
    return out;
}

const IntegerInterval* find(const Lemma1Family& fam, const std::string& label) {
    for (const auto& li : fam.intervals) {
        if (li.label == label) return &li.interval;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("lemma1_witness_set matches direct enumeration") {
    for (unsigned h = 2; h <= 9; ++h) {
        CAPTURE(h);
        CHECK(expand(lemma1_witness_set(h)) == witness_values(h));
    }
}

TEST_CASE("lemma1_witness_set examples") {
    const auto w2 = lemma1_witness_set(2);
    CHECK(union_contains(w2, {8, 11}));
    CHECK(union_contains(w2, {4, 11}));
    CHECK_FALSE(union_contains(w2, {12, 12}));
    CHECK(union_contains(lemma1_witness_set(3), {5, 31}));
    CHECK_THROWS_AS(lemma1_witness_set(1), InvalidInput);
}

TEST_CASE("lemma1_interval_family at h = 3") {
    const auto fam = lemma1_interval_family(3);
    REQUIRE(find(fam, "I(y3=1)"));
    CHECK(*find(fam, "I(y3=1)") == IntegerInterval(5, 21));
    CHECK(*find(fam, "I(y3=2)") == IntegerInterval(21, 30));
    CHECK(*find(fam, "extra(odd)") == IntegerInterval(31, 31));
    CHECK(fam.overlap_threshold == 1);
    CHECK(fam.top == 2);
    REQUIRE(fam.merged_union.size() == 1);
    CHECK(fam.merged_union.front() == IntegerInterval(5, 31));
    CHECK(fam.all_claims_hold());
}

TEST_CASE("lemma1_interval_family at h = 2") {
    const auto fam = lemma1_interval_family(2);
    CHECK(fam.overlap_threshold == 0);
    REQUIRE(fam.merged_union.size() == 1);
    CHECK(fam.merged_union.front() == IntegerInterval(4, 11));
    CHECK(*find(fam, "extra(even)") == IntegerInterval(11, 11));
    CHECK(fam.all_claims_hold());
    CHECK_THROWS_AS(lemma1_interval_family(1), InvalidInput);
}

TEST_CASE("family claims, union and containment for h in [2, 20]") {
    for (unsigned h = 2; h <= 20; ++h) {
        CAPTURE(h);
        const auto fam = lemma1_interval_family(h);
        for (const auto& c : fam.claims) {
            CAPTURE(c.label);
            CHECK(c.holds);
        }
        const auto a4 = static_cast<std::int64_t>(closed_form_term(h, 4));
        REQUIRE(fam.merged_union.size() == 1);
        CHECK(fam.merged_union.front() == IntegerInterval(h + 2, a4 - 1));
        CHECK(fam.overlap_threshold == (h % 2 ? (h - 1) / 2 : (h - 2) / 2));
        // the component of the full union starting at h + 2 stops right below a_4
        CHECK(fam.full_union.front() == IntegerInterval(h + 2, a4 - 1));

        const auto witnesses = lemma1_witness_set(h);
        for (const auto& li : fam.intervals) {
            CAPTURE(li.label);
            CHECK(union_contains(witnesses, li.interval));
        }
    }
}

TEST_CASE("soundness: witnessed candidates above h^2+h+1 are not admissible") {
    for (unsigned h = 2; h <= 8; ++h) {
        CAPTURE(h);
        const Element third = closed_form_term(h, 3);
        const std::vector<Element> prefix{0, 1, Element{h} + 1, third};
        const auto table = build_support_table(prefix, h);
        for (const auto& iv : lemma1_witness_set(h)) {
            for (auto b = std::max<std::int64_t>(iv.lo(), static_cast<std::int64_t>(third) + 1); b <= iv.hi(); ++b) {
                CHECK_FALSE(admissible(table, static_cast<Element>(b)));
            }
        }
    }
}

TEST_CASE("completeness: the gap below a_4 is fully witnessed") {
    for (unsigned h = 2; h <= 12; ++h) {
        const auto lo = static_cast<std::int64_t>(closed_form_term(h, 3)) + 1;
        const auto hi = static_cast<std::int64_t>(closed_form_term(h, 4)) - 1;
        CHECK(union_contains(lemma1_witness_set(h), {lo, hi}));
    }
}
