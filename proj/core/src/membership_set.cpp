#include "bhseq/membership_set.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

namespace bhseq {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

MembershipSet::MembershipSet(Backend backend, std::size_t universe_hint) {
    if (backend == Backend::Dense) {
        Dense d;
        d.words.reserve(words_for(std::min(universe_hint, kDenseBitLimit)));
        rep_ = std::move(d);
    } else {
        rep_ = Sparse{};
    }
}

MembershipSet MembershipSet::from_values(std::span<const Element> values, Backend backend) {
    MembershipSet s(backend);
    for (Element v : values) s.insert(v);
    return s;
}

Backend MembershipSet::backend() const noexcept {
    return std::holds_alternative<Dense>(rep_) ? Backend::Dense : Backend::Sparse;
}

bool MembershipSet::contains(Element v) const noexcept {
    if (const auto* d = std::get_if<Dense>(&rep_)) {
        if (v >= d->extent) return false;
        return (d->words[v / kWordBits] >> (v % kWordBits)) & 1u;
    }
    const auto& s = std::get<Sparse>(rep_);
    return std::binary_search(s.begin(), s.end(), v);
}

Element MembershipSet::max() const {
    if (empty()) throw InvalidInput("max() of an empty set");
    if (const auto* d = std::get_if<Dense>(&rep_)) return d->extent - 1;
    return std::get<Sparse>(rep_).back();
}

void MembershipSet::recount() {
    if (const auto* d = std::get_if<Dense>(&rep_)) {
        std::size_t n = 0;
        for (auto w : d->words) n += static_cast<std::size_t>(std::popcount(w));
        count_ = n;
    } else {
        count_ = std::get<Sparse>(rep_).size();
    }
}

void MembershipSet::insert(Element v) {
    if (auto* d = std::get_if<Dense>(&rep_)) {
        if (v >= kDenseBitLimit) {
            *this = converted(Backend::Sparse);
            insert(v);
            return;
        }
        const std::size_t q = v / kWordBits;
        if (q >= d->words.size()) d->words.resize(q + 1, 0);
        const std::uint64_t bit = std::uint64_t{1} << (v % kWordBits);
        if (!(d->words[q] & bit)) {
            d->words[q] |= bit;
            ++count_;
        }
        d->extent = std::max<std::size_t>(d->extent, v + 1);
        return;
    }
    auto& s = std::get<Sparse>(rep_);
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) {
        s.insert(it, v);
        ++count_;
    }
}

void MembershipSet::union_shifted(const MembershipSet& src, Element shift) {
    if (&src == this) {
        const MembershipSet copy = src;
        union_shifted(copy, shift);
        return;
    }
    if (src.empty()) return;
    const Element top = checked::add(src.max(), shift, "shifted union");

    if (auto* d = std::get_if<Dense>(&rep_)) {
        if (top >= kDenseBitLimit) {
            *this = converted(Backend::Sparse);
            union_shifted(src, shift);
            return;
        }
        const auto* sd = std::get_if<Dense>(&src.rep_);
        if (!sd) {
            for (Element v : std::get<Sparse>(src.rep_)) insert(v + shift);
            return;
        }
        const std::size_t need = words_for(top + 1);
        if (d->words.size() < need) d->words.resize(need, 0);
        const std::size_t r = shift % kWordBits;
        const std::size_t src_words = words_for(sd->extent);
        for (std::size_t i = 0; i < src_words; ++i) {
            const std::uint64_t w = sd->words[i];
            if (!w) continue;
            const std::size_t q = shift / kWordBits + i;
            d->words[q] |= w << r;
            if (r && q + 1 < d->words.size()) d->words[q + 1] |= w >> (kWordBits - r);
        }
        d->extent = std::max<std::size_t>(d->extent, top + 1);
        recount();
        return;
    }

    auto& s = std::get<Sparse>(rep_);
    std::vector<Element> shifted = src.values();
    for (auto& v : shifted) v += shift;
    Sparse merged;
    merged.reserve(s.size() + shifted.size());
    std::set_union(s.begin(), s.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
    s = std::move(merged);
    count_ = s.size();
}

bool MembershipSet::intersects_shifted(const MembershipSet& src, Element shift) const {
    if (empty() || src.empty()) return false;
    const Element mine = max();
    if (shift > mine) return false;

    const auto* d = std::get_if<Dense>(&rep_);
    const auto* sd = std::get_if<Dense>(&src.rep_);
    if (d && sd) {
        const std::size_t r = shift % kWordBits;
        const std::size_t base = shift / kWordBits;
        const std::size_t src_words = words_for(sd->extent);
        for (std::size_t i = 0; i < src_words; ++i) {
            const std::size_t q = base + i;
            if (q >= d->words.size()) break;
            const std::uint64_t w = sd->words[i];
            if (!w) continue;
            if (d->words[q] & (w << r)) return true;
            if (r && q + 1 < d->words.size() && (d->words[q + 1] & (w >> (kWordBits - r)))) return true;
        }
        return false;
    }
    if (d) {
        for (Element v : std::get<Sparse>(src.rep_)) {
            if (v > mine - shift) break;
            if (contains(v + shift)) return true;
        }
        return false;
    }
    const auto& s = std::get<Sparse>(rep_);
    if (sd) {
        for (auto it = std::lower_bound(s.begin(), s.end(), shift); it != s.end(); ++it) {
            if (src.contains(*it - shift)) return true;
        }
        return false;
    }
    const auto& t = std::get<Sparse>(src.rep_);
    auto a = std::lower_bound(s.begin(), s.end(), shift);
    auto b = t.begin();
    while (a != s.end() && b != t.end()) {
        const Element target = *b + shift;
        if (*a == target) return true;
        if (*a < target) {
            ++a;
        } else {
            ++b;
        }
    }
    return false;
}

bool MembershipSet::is_subset_of(const MembershipSet& other) const {
    if (size() > other.size()) return false;
    const auto* d = std::get_if<Dense>(&rep_);
    const auto* od = std::get_if<Dense>(&other.rep_);
    if (d && od) {
        for (std::size_t i = 0; i < d->words.size(); ++i) {
            const std::uint64_t o = i < od->words.size() ? od->words[i] : 0;
            if (d->words[i] & ~o) return false;
        }
        return true;
    }
    for (Element v : values()) {
        if (!other.contains(v)) return false;
    }
    return true;
}

std::vector<Element> MembershipSet::values() const {
    if (const auto* d = std::get_if<Dense>(&rep_)) {
        std::vector<Element> out;
        out.reserve(count_);
        for (std::size_t i = 0; i < d->words.size(); ++i) {
            std::uint64_t w = d->words[i];
            while (w) {
                const int bit = std::countr_zero(w);
                out.push_back(i * kWordBits + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
        return out;
    }
    return std::get<Sparse>(rep_);
}

MembershipSet MembershipSet::converted(Backend backend) const {
    if (backend == this->backend()) return *this;
    const auto v = values();
    if (backend == Backend::Dense && !v.empty() && v.back() >= kDenseBitLimit) {
        throw InvalidInput("set does not fit the dense backend");
    }
    return from_values(v, backend);
}

std::size_t MembershipSet::memory_bytes() const noexcept {
    if (const auto* d = std::get_if<Dense>(&rep_)) return d->words.capacity() * sizeof(std::uint64_t);
    return std::get<Sparse>(rep_).capacity() * sizeof(Element);
}

bool operator==(const MembershipSet& a, const MembershipSet& b) {
    return a.size() == b.size() && a.is_subset_of(b);
}

}  // namespace bhseq
