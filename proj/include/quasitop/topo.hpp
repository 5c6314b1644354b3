#ifndef QUASITOP_TOPO_HPP
#define QUASITOP_TOPO_HPP

#include "ground.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace quasitop {

// ---------------------------------------------------------------------------
// Generalized topologies
// ---------------------------------------------------------------------------

/// Why a family fails to be a generalized topology: either the empty set is
/// missing, or `pair` is two members whose union is missing.
struct GenTopologyViolation {
    bool missing_empty = false;
    std::optional<std::pair<Subset, Subset>> pair;
};

inline std::optional<GenTopologyViolation> find_gentopology_violation(const SetFamily& family)
{
    if (!family.contains(Subset{})) {
        return GenTopologyViolation{true, std::nullopt};
    }
    const auto& m = family.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!family.contains(m[i] | m[j])) {
                return GenTopologyViolation{false, std::make_pair(m[i], m[j])};
            }
        }
    }
    return std::nullopt;
}

class InvalidGenTopology : public DomainError {
  public:
    InvalidGenTopology(const std::string& message, GenTopologyViolation violation)
        : DomainError(message)
        , violation_(violation)
    {}

    const GenTopologyViolation& violation() const noexcept { return violation_; }

  private:
    GenTopologyViolation violation_;
};

/// A carrier with a family of open sets containing the empty set and closed
/// under unions. On a finite carrier, pairwise closure is arbitrary closure.
class GenTopology {
  public:
    GenTopology(GroundSet carrier, SetFamily opens) : carrier_(std::move(carrier)), opens_(std::move(opens))
    {
        for (Subset s : opens_) {
            carrier_.require_owns(s);
        }
        if (auto v = find_gentopology_violation(opens_)) {
            if (v->missing_empty) {
                throw InvalidGenTopology("open sets do not contain the empty set", *v);
            }
            throw InvalidGenTopology("union of open sets " + to_string(v->pair->first, carrier_) + " and "
                                         + to_string(v->pair->second, carrier_) + " is not open",
                                     *v);
        }
    }

    const GroundSet& carrier() const noexcept { return carrier_; }
    const SetFamily& opens() const noexcept { return opens_; }
    Subset whole() const noexcept { return carrier_.whole(); }
    std::size_t size() const noexcept { return carrier_.size(); }
    bool is_open(Subset s) const { return opens_.contains(s); }

    friend bool operator==(const GenTopology&, const GenTopology&) = default;

  private:
    GroundSet carrier_;
    SetFamily opens_;
};

/// mu[A]: all U such that every point of U lies in a member of A inside U.
/// Computed as the union closure; A is a base for the result.
inline GenTopology mu_of_family(const SetFamily& family, const GroundSet& ground)
{
    return GenTopology(ground, union_closure(family));
}

/// Every superset of every nonempty member of `family`.
inline SetFamily supersets_of_nonempty_members(const SetFamily& family, const GroundSet& ground,
                                               const Limits& limits = {})
{
    limits.require_enumerable("superset enumeration", ground.size());
    std::unordered_set<Mask> seen;
    std::vector<Subset> out;
    const Mask whole = ground.whole().bits();
    for (Subset a : family) {
        if (a.empty()) {
            continue;
        }
        for_each_submask(whole & ~a.bits(), [&](Mask extra) {
            if (seen.insert(a.bits() | extra).second) {
                out.emplace_back(a.bits() | extra);
            }
        });
    }
    return SetFamily(std::move(out));
}

/// mu~[A]: the empty set plus every superset of a nonempty member.
inline GenTopology mu_tilde_of_family(const SetFamily& family, const GroundSet& ground, const Limits& limits = {})
{
    return GenTopology(ground, supersets_of_nonempty_members(family, ground, limits).with(Subset{}));
}

/// super(S): the empty set plus every superset of S.
inline GenTopology superset_topology(Subset s, const GroundSet& ground, const Limits& limits = {})
{
    ground.require_owns(s);
    limits.require_enumerable("superset topology", ground.size());
    std::vector<Subset> out{Subset{}};
    for_each_submask(ground.whole().bits() & ~s.bits(), [&](Mask extra) { out.emplace_back(s.bits() | extra); });
    return GenTopology(ground, SetFamily(std::move(out)));
}

inline GenTopology discrete_topology(const GroundSet& ground, const Limits& limits = {})
{
    limits.require_enumerable("discrete topology", ground.size());
    return GenTopology(ground, SetFamily::powerset(ground.size()));
}

inline GenTopology indiscrete_topology(const GroundSet& ground)
{
    return GenTopology(ground, SetFamily{Subset{}, ground.whole()});
}

/// The empty set plus every set with finite complement. Every subset of a
/// finite carrier has finite complement, so this is the discrete topology.
inline GenTopology cofinite_topology(const GroundSet& ground, const Limits& limits = {})
{
    limits.require_enumerable("cofinite topology", ground.size());
    std::vector<Subset> out{Subset{}};
    const Mask whole = ground.whole().bits();
    for_each_submask(whole, [&](Mask u) {
        // X \ u is a subset of a finite carrier, hence finite.
        out.emplace_back(u);
    });
    return GenTopology(ground, SetFamily(std::move(out)));
}

// ---------------------------------------------------------------------------
// Closure, interior, density
// ---------------------------------------------------------------------------

/// Union of the open sets contained in `e`.
inline Subset interior(const GenTopology& t, Subset e)
{
    Subset out;
    for (Subset u : t.opens()) {
        if (u.subset_of(e)) {
            out = out | u;
        }
    }
    return out;
}

/// Intersection of the closed supersets of `e`, via X \ int(X \ e).
inline Subset closure(const GenTopology& t, Subset e)
{
    return t.whole() - interior(t, t.whole() - e);
}

inline bool is_dense(const GenTopology& t, Subset d)
{
    for (Subset u : t.opens()) {
        if (!u.empty() && !u.meets(d)) {
            return false;
        }
    }
    return true;
}

inline SetFamily dense_family(const GenTopology& t, const Limits& limits = {})
{
    limits.require_enumerable("dense family", t.size());
    std::vector<Subset> out;
    for_each_submask(t.whole().bits(), [&](Mask m) {
        if (is_dense(t, Subset(m))) {
            out.emplace_back(m);
        }
    });
    return SetFamily(std::move(out));
}

inline bool is_nowhere_dense(const GenTopology& t, Subset e) { return interior(t, closure(t, e)).empty(); }

inline SetFamily nowhere_dense_family(const GenTopology& t, const Limits& limits = {})
{
    limits.require_enumerable("nowhere dense family", t.size());
    std::vector<Subset> out;
    for_each_submask(t.whole().bits(), [&](Mask m) {
        if (is_nowhere_dense(t, Subset(m))) {
            out.emplace_back(m);
        }
    });
    return SetFamily(std::move(out));
}

/// {x : {x} is not nowhere dense}.
inline Subset non_nowhere_dense_points(const GenTopology& t)
{
    Mask m = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
        if (!is_nowhere_dense(t, Subset::singleton(x))) {
            m |= Mask{1} << x;
        }
    }
    return Subset(m);
}

/// Iso: points whose singleton is open.
inline Subset isolated_points(const GenTopology& t)
{
    Subset out;
    for (Subset u : t.opens()) {
        if (u.size() == 1) {
            out = out | u;
        }
    }
    return out;
}

inline SetFamily dense_open_family(const GenTopology& t)
{
    return t.opens().filter([&](Subset u) { return is_dense(t, u); });
}

// ---------------------------------------------------------------------------
// Intersections of families
// ---------------------------------------------------------------------------

/// I(A) is only defined when A has a nonempty member.
class UndefinedIntersection : public DomainError {
  public:
    UndefinedIntersection() : DomainError("intersection of nonempty members is undefined: no nonempty member") {}
};

inline std::optional<Subset> try_cap_I(const SetFamily& family)
{
    std::optional<Subset> out;
    for (Subset a : family) {
        if (!a.empty()) {
            out = out ? (*out & a) : a;
        }
    }
    return out;
}

/// I(A): intersection of the nonempty members.
inline Subset cap_I(const SetFamily& family)
{
    if (auto i = try_cap_I(family)) {
        return *i;
    }
    throw UndefinedIntersection();
}

/// B_A(x), the members containing x, and I_A(x), their intersection when B_A(x) is nonempty.
struct Neighbourhoods {
    SetFamily basis;
    std::optional<Subset> core;
};

inline Neighbourhoods neighborhoods(const SetFamily& family, std::size_t x)
{
    Neighbourhoods out;
    out.basis = family.filter([&](Subset a) { return a.contains(x); });
    for (Subset a : out.basis) {
        out.core = out.core ? (*out.core & a) : a;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct FamilyFlags {
    bool generalized_topology = false; // contains the empty set, closed under unions
    bool strong = false;               // ... and contains the carrier
    bool topology = false;             // ... and closed under pairwise intersection
    /// Closed under all nonempty intersections. Every subfamily of a finite
    /// family is finite, so on finite carriers this coincides with `topology`;
    /// it is reported separately so that statements phrased for Alexandroff
    /// topologies read as such.
    bool alexandroff = false;
};

inline bool is_intersection_closed(const SetFamily& family)
{
    const auto& m = family.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!family.contains(m[i] & m[j])) {
                return false;
            }
        }
    }
    return true;
}

inline FamilyFlags classify(const SetFamily& family, const GroundSet& ground)
{
    FamilyFlags f;
    bool owned = true;
    for (Subset s : family) {
        owned = owned && ground.owns(s);
    }
    f.generalized_topology = owned && !find_gentopology_violation(family).has_value();
    f.strong = f.generalized_topology && family.contains(ground.whole());
    f.topology = f.strong && is_intersection_closed(family);
    f.alexandroff = f.topology;
    return f;
}

inline FamilyFlags classify(const GenTopology& t) { return classify(t.opens(), t.carrier()); }

/// B is a base for mu: B is inside mu and every point of every open U lies
/// in some member of B inside U.
inline bool is_base_for(const SetFamily& base, const SetFamily& mu)
{
    if (!base.subset_of(mu)) {
        return false;
    }
    for (Subset u : mu) {
        Subset covered;
        for (Subset b : base) {
            if (b.subset_of(u)) {
                covered = covered | b;
            }
        }
        if (covered != u) {
            return false;
        }
    }
    return true;
}

} // namespace quasitop

#endif
