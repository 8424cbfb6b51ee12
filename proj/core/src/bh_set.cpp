#include "bhseq/bh_set.hpp"

#include "bhseq/representations.hpp"
#include "bhseq/support_table.hpp"

namespace bhseq {

bool BhSet::check(std::vector<Element> values, unsigned h) {
    require_order(h);
    auto sorted = normalize_set(std::move(values));
    const Element shift = sorted.front();
    for (auto& v : sorted) v -= shift;
    return verify_by_cardinality(build_support_table(sorted, h));
}

BhSet BhSet::certify(std::vector<Element> values, unsigned h) {
    auto sorted = normalize_set(std::move(values));
    if (!check(sorted, h)) throw InvalidInput("set is not a B_h-set");
    return BhSet(std::move(sorted), h);
}

}  // namespace bhseq
