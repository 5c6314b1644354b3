#ifndef QUASITOP_GROUND_HPP
#define QUASITOP_GROUND_HPP

#include "bits.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace quasitop {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// A requested powerset sweep or explicit enumeration exceeds its size cap.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string& what_sweep, std::size_t n, std::size_t cap)
        : std::runtime_error(what_sweep + ": carrier size " + std::to_string(n)
                             + " exceeds the enumeration cap " + std::to_string(cap))
        , n_(n)
        , cap_(cap)
    {}

    std::size_t size() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

  private:
    std::size_t n_;
    std::size_t cap_;
};

/// Input does not describe a valid object over the given carrier.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Size caps for explicit enumerations. Predicates never consult these.
struct Limits {
    std::size_t enumeration_cap = 16;   // powerset sweeps, explicit topologies
    std::size_t resolvability_cap = 24; // 2^(n-1) density checks

    void require_enumerable(std::string_view what, std::size_t n) const
    {
        if (n > enumeration_cap) {
            throw CapExceeded(std::string(what), n, enumeration_cap);
        }
    }
};

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

/// A subset of a carrier, one bit per element index.
class Subset {
  public:
    constexpr Subset() noexcept = default;
    constexpr explicit Subset(Mask bits) noexcept : bits_(bits) {}

    static constexpr Subset of(std::initializer_list<std::size_t> indices) noexcept
    {
        Mask m = 0;
        for (std::size_t i : indices) {
            m |= Mask{1} << i;
        }
        return Subset(m);
    }

    static constexpr Subset singleton(std::size_t i) noexcept { return Subset(Mask{1} << i); }

    constexpr Mask bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1; }
    constexpr std::size_t size() const noexcept { return popcount(bits_); }

    constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool meets(Subset other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Lowest element index; undefined for the empty set.
    std::size_t first() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (Mask m = bits_; m != 0; m &= m - 1) {
            fn(static_cast<std::size_t>(std::countr_zero(m)));
        }
    }

    friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(Subset a, Subset b) noexcept = default;

    /// Canonical order: ascending cardinality, then ascending mask value.
    friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) noexcept
    {
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        return a.bits_ <=> b.bits_;
    }

  private:
    Mask bits_ = 0;
};

// ---------------------------------------------------------------------------
// GroundSet
// ---------------------------------------------------------------------------

/// The carrier: element count plus stable labels. Index i names labels()[i].
class GroundSet {
  public:
    GroundSet() = default;

    explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels))
    {
        if (labels_.size() > max_carrier_size) {
            throw DomainError("ground set has " + std::to_string(labels_.size())
                              + " elements; at most 64 are supported");
        }
        std::vector<std::string> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
            throw DomainError("duplicate ground label \"" + *it + "\"");
        }
    }

    /// Carrier labelled first, first+1, ..., first+n-1.
    static GroundSet numbered(std::size_t n, int first = 1)
    {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(std::to_string(first + static_cast<int>(i)));
        }
        return GroundSet(std::move(labels));
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    Subset whole() const noexcept { return Subset(low_bits(size())); }

    std::optional<std::size_t> index_of(std::string_view label) const
    {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] == label) {
                return i;
            }
        }
        return std::nullopt;
    }

    bool owns(Subset s) const noexcept { return s.subset_of(whole()); }

    void require_owns(Subset s) const
    {
        if (!owns(s)) {
            throw DomainError("subset has bits beyond the carrier of size " + std::to_string(size()));
        }
    }

    /// Subset from labels; throws DomainError on an unknown label.
    Subset subset(std::initializer_list<std::string_view> labels) const
    {
        return subset(std::vector<std::string_view>(labels));
    }

    template <typename Range>
    Subset subset(const Range& labels) const
    {
        Mask m = 0;
        for (const auto& l : labels) {
            auto idx = index_of(l);
            if (!idx) {
                throw DomainError("unknown element label \"" + std::string(l) + "\"");
            }
            m |= Mask{1} << *idx;
        }
        return Subset(m);
    }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

  private:
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// SetFamily
// ---------------------------------------------------------------------------

/// A deduplicated collection of subsets kept in canonical order.
class SetFamily {
  public:
    using const_iterator = std::vector<Subset>::const_iterator;

    SetFamily() = default;
    SetFamily(std::initializer_list<Subset> members) : SetFamily(std::vector<Subset>(members)) {}

    explicit SetFamily(std::vector<Subset> members) : members_(std::move(members))
    {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    /// All 2^n subsets of an n-element carrier.
    static SetFamily powerset(std::size_t n)
    {
        if (n > 30) {
            throw CapExceeded("powerset", n, 30);
        }
        std::vector<Subset> all;
        all.reserve(std::size_t{1} << n);
        for_each_submask_canonical(low_bits(n), [&](Mask m) {
            all.emplace_back(m);
            return true;
        });
        SetFamily f;
        f.members_ = std::move(all);
        return f;
    }

    const std::vector<Subset>& members() const noexcept { return members_; }
    const_iterator begin() const noexcept { return members_.begin(); }
    const_iterator end() const noexcept { return members_.end(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

    bool subset_of(const SetFamily& other) const
    {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
    }

    /// Union of all members.
    Subset span() const noexcept
    {
        Subset u;
        for (Subset s : members_) {
            u = u | s;
        }
        return u;
    }

    SetFamily with(Subset s) const
    {
        if (contains(s)) {
            return *this;
        }
        SetFamily out = *this;
        out.members_.insert(std::upper_bound(out.members_.begin(), out.members_.end(), s), s);
        return out;
    }

    SetFamily without(Subset s) const
    {
        SetFamily out = *this;
        auto it = std::lower_bound(out.members_.begin(), out.members_.end(), s);
        if (it != out.members_.end() && *it == s) {
            out.members_.erase(it);
        }
        return out;
    }

    template <typename Pred>
    SetFamily filter(Pred&& pred) const
    {
        SetFamily out;
        for (Subset s : members_) {
            if (pred(s)) {
                out.members_.push_back(s);
            }
        }
        return out;
    }

    friend SetFamily operator|(const SetFamily& a, const SetFamily& b)
    {
        SetFamily out;
        std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                       std::back_inserter(out.members_));
        return out;
    }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

  private:
    std::vector<Subset> members_;
};

// ---------------------------------------------------------------------------
// Closures
// ---------------------------------------------------------------------------
//
// On a finite carrier every subfamily is finite, so a family closed under
// pairwise unions (resp. intersections) is closed under arbitrary nonempty
// unions (resp. intersections): fold the subfamily two members at a time.
// The worklists below therefore compute the arbitrary-union and
// arbitrary-intersection closures. Each new set is only combined with the
// generators, since every finite union of generators is reached by adding
// one generator at a time.

namespace detail {

template <typename Combine>
std::vector<Subset> worklist_closure(std::vector<Subset> seeds, const std::vector<Subset>& generators,
                                     Combine combine)
{
    std::unordered_set<Mask> seen;
    std::vector<Subset> out;
    std::vector<Subset> queue;
    for (Subset s : seeds) {
        if (seen.insert(s.bits()).second) {
            out.push_back(s);
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Subset s = queue.back();
        queue.pop_back();
        for (Subset g : generators) {
            const Subset c = combine(s, g);
            if (seen.insert(c.bits()).second) {
                out.push_back(c);
                queue.push_back(c);
            }
        }
    }
    return out;
}

} // namespace detail

/// Smallest family containing the empty set and every member, closed under unions.
inline SetFamily union_closure(const SetFamily& family)
{
    std::vector<Subset> seeds{Subset{}};
    return SetFamily(detail::worklist_closure(std::move(seeds), family.members(),
                                              [](Subset a, Subset b) { return a | b; }));
}

/// Smallest superfamily closed under pairwise intersection.
inline SetFamily intersection_closure(const SetFamily& family)
{
    return SetFamily(detail::worklist_closure(family.members(), family.members(),
                                              [](Subset a, Subset b) { return a & b; }));
}

/// Coarsest topology on the carrier containing every member of `family`.
inline SetFamily generated_topology(const SetFamily& family, const GroundSet& ground)
{
    return union_closure(intersection_closure(family.with(ground.whole())));
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

inline std::string to_string(Subset s, const GroundSet& ground)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) {
            os << ',';
        }
        first = false;
        os << (i < ground.size() ? ground.label(i) : "#" + std::to_string(i));
    });
    os << '}';
    return os.str();
}

inline std::string to_string(const SetFamily& family, const GroundSet& ground)
{
    std::string out = "{";
    bool first = true;
    for (Subset s : family) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += to_string(s, ground);
    }
    return out + "}";
}

} // namespace quasitop

#endif
