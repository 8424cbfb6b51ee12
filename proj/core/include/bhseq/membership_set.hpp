#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "bhseq/checked.hpp"

namespace bhseq {

/// Dense universes at or below this many bits are stored as a bit vector.
inline constexpr std::size_t kDenseBitLimit = std::size_t{1} << 27;

enum class Backend { Dense, Sparse };

/// Set of nonnegative integers with two interchangeable representations:
/// a dense bit vector over [0, universe) and a sorted array of values.
///
/// The two operations the greedy engine needs in its hot loop are
/// `union_shifted` (D |= S + t) and `intersects_shifted` ((S + t) meets D).
/// Both work word-at-a-time on the dense backend.
class MembershipSet {
public:
    MembershipSet() : MembershipSet(Backend::Sparse) {}
    explicit MembershipSet(Backend backend, std::size_t universe_hint = 0);

    static MembershipSet from_values(std::span<const Element> values, Backend backend);

    Backend backend() const noexcept;
    bool contains(Element v) const noexcept;
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    /// Largest member; the set must be nonempty.
    Element max() const;

    void insert(Element v);

    /// this ∪= { x + shift : x ∈ src }.
    void union_shifted(const MembershipSet& src, Element shift);

    /// True iff some x ∈ src has x + shift ∈ this.
    bool intersects_shifted(const MembershipSet& src, Element shift) const;

    bool is_subset_of(const MembershipSet& other) const;

    /// Sorted member list.
    std::vector<Element> values() const;

    MembershipSet converted(Backend backend) const;

    std::size_t memory_bytes() const noexcept;

    friend bool operator==(const MembershipSet& a, const MembershipSet& b);

private:
    struct Dense {
        std::vector<std::uint64_t> words;
        // highest set bit + 1, so scans can stop early
        std::size_t extent = 0;
    };
    using Sparse = std::vector<Element>;

    void recount();

    std::variant<Sparse, Dense> rep_;
    std::size_t count_ = 0;
};

}  // namespace bhseq
