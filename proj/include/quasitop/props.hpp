#ifndef QUASITOP_PROPS_HPP
#define QUASITOP_PROPS_HPP

#include "topo.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace quasitop {

using SubsetPair = std::pair<Subset, Subset>;

// ---------------------------------------------------------------------------
// Separation and triviality
// ---------------------------------------------------------------------------

/// First pair of distinct points that no open set separates.
inline std::optional<std::pair<std::size_t, std::size_t>> t0_violation(const GenTopology& t)
{
    for (std::size_t x = 0; x < t.size(); ++x) {
        for (std::size_t y = x + 1; y < t.size(); ++y) {
            const Subset xy = Subset::of({x, y});
            bool separated = false;
            for (Subset u : t.opens()) {
                if ((u & xy).size() == 1) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                return std::make_pair(x, y);
            }
        }
    }
    return std::nullopt;
}

/// First point whose singleton is not closed.
inline std::optional<std::size_t> t1_violation(const GenTopology& t)
{
    for (std::size_t x = 0; x < t.size(); ++x) {
        if (!t.is_open(t.whole() - Subset::singleton(x))) {
            return x;
        }
    }
    return std::nullopt;
}

inline bool is_T0(const GenTopology& t) { return !t0_violation(t).has_value(); }
inline bool is_T1(const GenTopology& t) { return !t1_violation(t).has_value(); }

/// mu is inside {empty, X}; note that {empty} alone counts.
inline bool is_indiscrete(const GenTopology& t)
{
    for (Subset u : t.opens()) {
        if (!u.empty() && u != t.whole()) {
            return false;
        }
    }
    return true;
}

/// Every singleton open, hence (unions) every subset open.
inline bool is_discrete(const GenTopology& t) { return isolated_points(t) == t.whole(); }

inline bool is_iso_dense(const GenTopology& t) { return is_dense(t, isolated_points(t)); }
inline bool is_dense_in_itself(const GenTopology& t) { return isolated_points(t).empty(); }

// ---------------------------------------------------------------------------
// Resolvability
// ---------------------------------------------------------------------------

/// A dense D whose complement is dense, or nullopt when irresolvable.
///
/// An isolated point belongs to every dense set, so it cannot be split
/// between D and X \ D; such spaces are rejected before searching. The
/// search only visits D with element 0 outside D (the complement covers the
/// other half) in canonical order, so the reported witness is deterministic.
inline std::optional<SubsetPair> resolution(const GenTopology& t, const Limits& limits = {})
{
    if (t.size() > limits.resolvability_cap) {
        throw CapExceeded("resolvability search", t.size(), limits.resolvability_cap);
    }
    if (!isolated_points(t).empty()) {
        return std::nullopt;
    }
    const Subset whole = t.whole();
    const Mask pool = t.size() == 0 ? Mask{0} : whole.bits() & ~Mask{1};
    std::optional<SubsetPair> found;
    for_each_submask_canonical(pool, [&](Mask m) {
        const Subset d(m);
        if (is_dense(t, d) && is_dense(t, whole - d)) {
            found = SubsetPair{d, whole - d};
            return false;
        }
        return true;
    });
    return found;
}

inline bool is_resolvable(const GenTopology& t, const Limits& limits = {})
{
    return resolution(t, limits).has_value();
}

// ---------------------------------------------------------------------------
// Intersections of dense sets
// ---------------------------------------------------------------------------

namespace detail {

/// First dense pair (A, B) in canonical order for which `bad(A & B)` holds.
template <typename Bad>
std::optional<SubsetPair> dense_pair_violation(const GenTopology& t, const Limits& limits, Bad bad)
{
    const SetFamily dense = dense_family(t, limits);
    const auto& d = dense.members();
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i; j < d.size(); ++j) {
            if (bad(d[i] & d[j])) {
                return SubsetPair{d[i], d[j]};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Dense sets A, B with A & B not dense.
inline std::optional<SubsetPair> f_d_violation(const GenTopology& t, const Limits& limits = {})
{
    return detail::dense_pair_violation(t, limits, [&](Subset c) { return !is_dense(t, c); });
}

/// Dense sets A, B with A & B nonempty and not dense.
inline std::optional<SubsetPair> f_d_T_violation(const GenTopology& t, const Limits& limits = {})
{
    return detail::dense_pair_violation(t, limits, [&](Subset c) { return !c.empty() && !is_dense(t, c); });
}

/// Every intersection of two dense sets is dense.
inline bool f_d(const GenTopology& t, const Limits& limits = {}) { return !f_d_violation(t, limits); }

/// Every intersection of two dense sets is empty or dense, i.e. the dense
/// sets together with the empty set form a topology.
inline bool f_d_T(const GenTopology& t, const Limits& limits = {}) { return !f_d_T_violation(t, limits); }

/// Result of a sampled check above the enumeration cap. `authoritative` is
/// false unless a violation was actually exhibited.
struct SampledVerdict {
    bool value = true;
    bool authoritative = false;
    std::optional<SubsetPair> witness;
};

/// Samples random dense sets and tests their pairwise intersections. A
/// "true" answer here is evidence only.
inline SampledVerdict f_d_sampled(const GenTopology& t, std::uint64_t seed, std::size_t samples, bool allow_empty)
{
    std::mt19937_64 rng(seed);
    const Mask whole = t.whole().bits();
    std::vector<Subset> dense{t.whole()};
    for (std::size_t i = 0; i < samples; ++i) {
        const Subset s(rng() & whole);
        if (is_dense(t, s)) {
            dense.push_back(s);
        }
    }
    SampledVerdict out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        for (std::size_t j = i; j < dense.size(); ++j) {
            const Subset c = dense[i] & dense[j];
            if (!(allow_empty && c.empty()) && !is_dense(t, c)) {
                return SampledVerdict{false, true, SubsetPair{dense[i], dense[j]}};
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

/// All whole-space flags of one generalized topology with their witnesses.
struct SpaceProfile {
    bool t0 = false;
    bool t1 = false;
    bool indiscrete = false;
    bool discrete = false;
    bool iso_dense = false;
    bool dense_in_itself = false;
    bool resolvable = false;
    bool fd = false;
    bool fd_t = false;

    std::optional<std::pair<std::size_t, std::size_t>> t0_witness; // unseparated pair
    std::optional<std::size_t> t1_witness;                           // non-closed singleton
    std::optional<Subset> indiscrete_witness;                        // open set other than empty and X
    std::optional<std::size_t> discrete_witness;                     // non-isolated point
    std::optional<Subset> iso_dense_witness;                         // nonempty open missing Iso
    std::optional<std::size_t> dense_in_itself_witness;              // an isolated point
    std::optional<SubsetPair> resolvable_witness;                    // dense D and dense X \ D
    std::optional<std::size_t> irresolvable_witness;                 // isolated point, when one exists
    std::optional<SubsetPair> fd_witness;                            // dense pair, intersection not dense
    std::optional<SubsetPair> fd_t_witness;                          // ... nonempty and not dense
};

inline SpaceProfile profile(const GenTopology& t, const Limits& limits = {})
{
    SpaceProfile p;
    p.t0_witness = t0_violation(t);
    p.t0 = !p.t0_witness;
    p.t1_witness = t1_violation(t);
    p.t1 = !p.t1_witness;

    p.indiscrete = true;
    for (Subset u : t.opens()) {
        if (!u.empty() && u != t.whole()) {
            p.indiscrete = false;
            p.indiscrete_witness = u;
            break;
        }
    }

    const Subset iso = isolated_points(t);
    p.discrete = iso == t.whole();
    if (!p.discrete) {
        p.discrete_witness = (t.whole() - iso).first();
    }
    p.dense_in_itself = iso.empty();
    if (!p.dense_in_itself) {
        p.dense_in_itself_witness = iso.first();
    }
    p.iso_dense = true;
    for (Subset u : t.opens()) {
        if (!u.empty() && !u.meets(iso)) {
            p.iso_dense = false;
            p.iso_dense_witness = u;
            break;
        }
    }

    p.resolvable_witness = resolution(t, limits);
    p.resolvable = p.resolvable_witness.has_value();
    if (!p.resolvable && !iso.empty()) {
        p.irresolvable_witness = iso.first();
    }

    p.fd_witness = f_d_violation(t, limits);
    p.fd = !p.fd_witness;
    p.fd_t_witness = f_d_T_violation(t, limits);
    p.fd_t = !p.fd_t_witness;
    return p;
}

} // namespace quasitop

#endif
