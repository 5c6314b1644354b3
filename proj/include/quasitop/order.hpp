#ifndef QUASITOP_ORDER_HPP
#define QUASITOP_ORDER_HPP

#include "ground.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasitop {

/// A reflexive transitive relation stored as rows: row x holds {y : x <= y}.
class Quasiorder {
  public:
    Quasiorder() = default;

    static Quasiorder identity(std::size_t n)
    {
        std::vector<Mask> rows(n);
        for (std::size_t x = 0; x < n; ++x) {
            rows[x] = Mask{1} << x;
        }
        return Quasiorder(std::move(rows), unchecked_tag{});
    }

    static Quasiorder full(std::size_t n)
    {
        return Quasiorder(std::vector<Mask>(n, low_bits(n)), unchecked_tag{});
    }

    /// Validating constructor; throws DomainError when `rows` is not a quasiorder.
    static Quasiorder from_rows(std::vector<Mask> rows)
    {
        if (rows.size() > max_carrier_size) {
            throw DomainError("quasiorder on more than 64 elements");
        }
        const Mask universe = low_bits(rows.size());
        for (std::size_t x = 0; x < rows.size(); ++x) {
            if ((rows[x] & ~universe) != 0) {
                throw DomainError("row " + std::to_string(x) + " has bits beyond n");
            }
            if (((rows[x] >> x) & 1) == 0) {
                throw DomainError("relation is not reflexive at " + std::to_string(x));
            }
        }
        for (std::size_t x = 0; x < rows.size(); ++x) {
            for (Mask m = rows[x]; m != 0; m &= m - 1) {
                const auto y = static_cast<std::size_t>(std::countr_zero(m));
                if ((rows[y] & ~rows[x]) != 0) {
                    throw DomainError("relation is not transitive: " + std::to_string(x) + " <= "
                                      + std::to_string(y) + " but up-set of " + std::to_string(y)
                                      + " is not contained in up-set of " + std::to_string(x));
                }
            }
        }
        return Quasiorder(std::move(rows), unchecked_tag{});
    }

    /// Reflexive-transitive closure of the given pairs (x <= y).
    static Quasiorder closure_of(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs)
    {
        if (n > max_carrier_size) {
            throw DomainError("quasiorder on more than 64 elements");
        }
        std::vector<Mask> rows(n);
        for (std::size_t x = 0; x < n; ++x) {
            rows[x] = Mask{1} << x;
        }
        for (auto [x, y] : pairs) {
            if (x >= n || y >= n) {
                throw std::out_of_range("pair index out of range");
            }
            rows[x] |= Mask{1} << y;
        }
        // Warshall over row bitsets.
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t x = 0; x < n; ++x) {
                if ((rows[x] >> k) & 1) {
                    rows[x] |= rows[k];
                }
            }
        }
        return Quasiorder(std::move(rows), unchecked_tag{});
    }

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Mask>& rows() const noexcept { return rows_; }

    bool leq(std::size_t x, std::size_t y) const noexcept { return (rows_[x] >> y) & 1; }
    bool equivalent(std::size_t x, std::size_t y) const noexcept { return leq(x, y) && leq(y, x); }

    /// Number of related pairs, the diagonal included.
    std::size_t pair_count() const noexcept
    {
        std::size_t c = 0;
        for (Mask r : rows_) {
            c += popcount(r);
        }
        return c;
    }

    /// Containment of relations as sets of pairs.
    bool subset_of(const Quasiorder& other) const noexcept
    {
        if (other.size() != size()) {
            return false;
        }
        for (std::size_t x = 0; x < size(); ++x) {
            if ((rows_[x] & ~other.rows_[x]) != 0) {
                return false;
            }
        }
        return true;
    }

    bool is_antisymmetric() const noexcept
    {
        for (std::size_t x = 0; x < size(); ++x) {
            for (std::size_t y = x + 1; y < size(); ++y) {
                if (equivalent(x, y)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const Quasiorder&, const Quasiorder&) = default;

  private:
    struct unchecked_tag {};
    Quasiorder(std::vector<Mask> rows, unchecked_tag) : rows_(std::move(rows)) {}

    std::vector<Mask> rows_;
};

/// x <= y iff every member containing x contains y.
inline Quasiorder quasiorder_from_family(const SetFamily& family, const GroundSet& ground)
{
    const std::size_t n = ground.size();
    std::vector<Mask> rows(n, ground.whole().bits());
    for (Subset a : family) {
        a.for_each([&](std::size_t x) { rows[x] &= a.bits(); });
    }
    return Quasiorder::from_rows(std::move(rows));
}

/// The same relation built from neighbourhood systems: x <= y iff every
/// member containing x also contains y, tested as B(x) included in B(y).
inline Quasiorder quasiorder_from_neighbourhoods(const SetFamily& family, const GroundSet& ground)
{
    const std::size_t n = ground.size();
    // membership[x] has bit k set iff the k-th member contains x
    std::vector<std::vector<bool>> membership(n, std::vector<bool>(family.size()));
    for (std::size_t k = 0; k < family.size(); ++k) {
        family.members()[k].for_each([&](std::size_t x) { membership[x][k] = true; });
    }
    std::vector<Mask> rows(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            bool included = true;
            for (std::size_t k = 0; k < family.size() && included; ++k) {
                included = !membership[x][k] || membership[y][k];
            }
            if (included) {
                rows[x] |= Mask{1} << y;
            }
        }
    }
    return Quasiorder::from_rows(std::move(rows));
}

inline Subset up_set(const Quasiorder& q, std::size_t x)
{
    if (x >= q.size()) {
        throw std::out_of_range("element index " + std::to_string(x) + " out of range");
    }
    return Subset(q.rows()[x]);
}

inline Subset down_set(const Quasiorder& q, std::size_t x)
{
    if (x >= q.size()) {
        throw std::out_of_range("element index " + std::to_string(x) + " out of range");
    }
    Mask m = 0;
    for (std::size_t y = 0; y < q.size(); ++y) {
        if (q.leq(y, x)) {
            m |= Mask{1} << y;
        }
    }
    return Subset(m);
}

inline bool is_increasing(const Quasiorder& q, Subset s)
{
    bool ok = true;
    s.for_each([&](std::size_t x) { ok = ok && (q.rows()[x] & ~s.bits()) == 0; });
    return ok;
}

inline bool is_decreasing(const Quasiorder& q, Subset s)
{
    for (std::size_t y = 0; y < q.size(); ++y) {
        if (!s.contains(y) && (q.rows()[y] & s.bits()) != 0) {
            return false;
        }
    }
    return true;
}

/// All increasing sets, built as the union closure of the principal up-sets.
/// The family can have up to 2^n members, hence the cap; past it use
/// is_increasing as a membership test.
inline SetFamily specialization_topology(const Quasiorder& q, const Limits& limits = {})
{
    if (q.size() > limits.enumeration_cap) {
        throw CapExceeded("specialization topology (use is_increasing for membership)", q.size(),
                          limits.enumeration_cap);
    }
    std::vector<Subset> ups;
    ups.reserve(q.size());
    for (Mask r : q.rows()) {
        ups.emplace_back(r);
    }
    return union_closure(SetFamily(std::move(ups)));
}

inline Quasiorder dual(const Quasiorder& q)
{
    std::vector<Mask> rows(q.size(), 0);
    for (std::size_t x = 0; x < q.size(); ++x) {
        for (Mask m = q.rows()[x]; m != 0; m &= m - 1) {
            rows[static_cast<std::size_t>(std::countr_zero(m))] |= Mask{1} << x;
        }
    }
    return Quasiorder::from_rows(std::move(rows));
}

inline Subset maximal_elements(const Quasiorder& q)
{
    Mask m = 0;
    for (std::size_t a = 0; a < q.size(); ++a) {
        if (q.rows()[a] == (Mask{1} << a)) {
            m |= Mask{1} << a;
        }
    }
    return Subset(m);
}

inline Subset minimal_elements(const Quasiorder& q) { return maximal_elements(dual(q)); }

/// a is weakly maximal iff a <= x forces x ~ a.
inline Subset weakly_maximal_elements(const Quasiorder& q)
{
    Mask m = 0;
    for (std::size_t a = 0; a < q.size(); ++a) {
        bool weak = true;
        for (Mask r = q.rows()[a]; r != 0 && weak; r &= r - 1) {
            weak = q.leq(static_cast<std::size_t>(std::countr_zero(r)), a);
        }
        if (weak) {
            m |= Mask{1} << a;
        }
    }
    return Subset(m);
}

inline Subset weakly_minimal_elements(const Quasiorder& q) { return weakly_maximal_elements(dual(q)); }

/// Equivalence classes of x ~ y (x <= y and y <= x) with the induced partial order.
struct QuotientOrder {
    std::vector<Subset> classes;  // ordered by lowest member index
    std::vector<Mask> order;      // order[a] bit b set iff class a precedes-or-equals class b

    std::size_t class_of(std::size_t x) const
    {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].contains(x)) {
                return c;
            }
        }
        throw std::out_of_range("element not in any class");
    }

    bool leq(std::size_t a, std::size_t b) const noexcept { return (order[a] >> b) & 1; }

    /// Union of the classes that are maximal in the quotient order.
    Subset maximal_class_members() const
    {
        Subset out;
        for (std::size_t a = 0; a < classes.size(); ++a) {
            if (order[a] == (Mask{1} << a)) {
                out = out | classes[a];
            }
        }
        return out;
    }

    Subset minimal_class_members() const
    {
        Subset out;
        for (std::size_t b = 0; b < classes.size(); ++b) {
            bool minimal = true;
            for (std::size_t a = 0; a < classes.size() && minimal; ++a) {
                minimal = a == b || !leq(a, b);
            }
            if (minimal) {
                out = out | classes[b];
            }
        }
        return out;
    }
};

inline QuotientOrder quotient(const Quasiorder& q)
{
    QuotientOrder out;
    Mask assigned = 0;
    std::vector<std::size_t> representatives;
    for (std::size_t x = 0; x < q.size(); ++x) {
        if ((assigned >> x) & 1) {
            continue;
        }
        Mask cls = 0;
        for (std::size_t y = x; y < q.size(); ++y) {
            if (q.equivalent(x, y)) {
                cls |= Mask{1} << y;
            }
        }
        assigned |= cls;
        out.classes.emplace_back(cls);
        representatives.push_back(x);
    }
    out.order.assign(out.classes.size(), 0);
    for (std::size_t a = 0; a < out.classes.size(); ++a) {
        for (std::size_t b = 0; b < out.classes.size(); ++b) {
            if (q.leq(representatives[a], representatives[b])) {
                out.order[a] |= Mask{1} << b;
            }
        }
    }
    return out;
}

} // namespace quasitop

#endif
