#include "bhseq/representations.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace bhseq {

std::optional<Element> binomial(Element n, Element k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    WideUnsigned r = 1;
    for (Element i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return std::nullopt;
    }
    return static_cast<Element>(r);
}

std::vector<Element> normalize_set(std::vector<Element> values) {
    if (values.empty()) throw InvalidInput("set must be nonempty");
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
        throw InvalidInput("duplicate element in set");
    }
    return values;
}

void require_order(unsigned h) {
    if (h == 0) throw InvalidInput("h must be at least 1");
}

std::string Collision::to_string() const {
    auto join = [](const Multiset& m) {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) s += '+';
            s += std::to_string(m[i]);
        }
        return s;
    };
    return join(left) + " = " + join(right);
}

namespace {

// Visits every size-h multiset of `set` (indices non-decreasing) in
// lexicographic order. The visitor returns false to stop.
void for_each_multiset(std::span<const Element> set, unsigned h,
                       const std::function<bool(const std::vector<std::size_t>&, Element)>& visit) {
    std::vector<std::size_t> idx(h, 0);
    std::vector<Element> prefix(h + 1, 0);
    for (unsigned i = 0; i < h; ++i) prefix[i + 1] = checked::add(prefix[i], set[0], "h-fold sum");
    const std::size_t m = set.size();
    while (true) {
        if (!visit(idx, prefix[h])) return;
        int pos = static_cast<int>(h) - 1;
        while (pos >= 0 && idx[pos] == m - 1) --pos;
        if (pos < 0) return;
        const std::size_t next = idx[pos] + 1;
        for (unsigned i = static_cast<unsigned>(pos); i < h; ++i) {
            idx[i] = next;
            prefix[i + 1] = checked::add(prefix[i], set[next], "h-fold sum");
        }
    }
}

Multiset materialize(std::span<const Element> set, const std::vector<std::size_t>& idx) {
    Multiset out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(set[i]);
    return out;
}

}  // namespace

std::uint64_t count_representations(std::span<const Element> set, unsigned h, Element n) {
    require_order(h);
    const auto a = normalize_set({set.begin(), set.end()});
    std::uint64_t count = 0;
    for_each_multiset(a, h, [&](const std::vector<std::size_t>&, Element sum) {
        if (sum == n) ++count;
        return true;
    });
    return count;
}

std::optional<Collision> find_collision_bruteforce(std::span<const Element> set, unsigned h) {
    require_order(h);
    const auto a = normalize_set({set.begin(), set.end()});
    std::unordered_map<Element, std::vector<std::size_t>> first_seen;
    std::optional<Collision> found;
    for_each_multiset(a, h, [&](const std::vector<std::size_t>& idx, Element sum) {
        auto [it, inserted] = first_seen.try_emplace(sum, idx);
        if (!inserted) {
            found = Collision{materialize(a, it->second), materialize(a, idx), sum};
            return false;
        }
        return true;
    });
    return found;
}

bool is_bh_set_bruteforce(std::span<const Element> set, unsigned h) {
    return !find_collision_bruteforce(set, h).has_value();
}

}  // namespace bhseq
