#ifndef QUASITOP_THEOREMS_HPP
#define QUASITOP_THEOREMS_HPP

// Machine-checkable statements about quasiorders, generalized topologies and
// dense sets, evaluated on single finite instances and swept over exhaustive
// or seeded random instance streams.
//
// Every statement records its hypothesis, a list of labelled conditions and
// clauses relating them (holds / iff / implies, optionally guarded by another
// condition). Conditions are computed independently from the primitives in
// order.hpp, topo.hpp and props.hpp; only afterwards are the clauses checked,
// so a faulty primitive surfaces as a violated verdict.

#include "json_io.hpp"
#include "order.hpp"
#include "props.hpp"
#include "topo.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace quasitop {

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

enum class InstanceKind { family, space, quasiorder, quasiorder_pair };

inline std::string_view to_string(InstanceKind k)
{
    switch (k) {
    case InstanceKind::family: return "family";
    case InstanceKind::space: return "space";
    case InstanceKind::quasiorder: return "quasiorder";
    case InstanceKind::quasiorder_pair: return "quasiorder-pair";
    }
    return "?";
}

struct FamilyInstance {
    GroundSet ground;
    SetFamily family;
};

struct OrderInstance {
    GroundSet ground;
    Quasiorder order;
};

/// Two quasiorders on one carrier; `finer` plays the starred relation.
struct OrderPairInstance {
    GroundSet ground;
    Quasiorder order;
    Quasiorder finer;
};

using Instance = std::variant<FamilyInstance, GenTopology, OrderInstance, OrderPairInstance>;

inline InstanceKind kind_of(const Instance& inst)
{
    return static_cast<InstanceKind>(inst.index());
}

inline json instance_to_json(const Instance& inst)
{
    return std::visit(
        [](const auto& i) -> json {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, FamilyInstance>) {
                return json{{"ground", to_json(i.ground)}, {"family", to_json(i.family, i.ground)}};
            } else if constexpr (std::is_same_v<T, GenTopology>) {
                return to_json(i);
            } else if constexpr (std::is_same_v<T, OrderInstance>) {
                return json{{"ground", to_json(i.ground)}, {"quasiorder", to_json(i.order)}};
            } else {
                return json{{"ground", to_json(i.ground)},
                            {"quasiorder", to_json(i.order)},
                            {"finer", to_json(i.finer)}};
            }
        },
        inst);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Condition {
    std::string label;
    std::string text;
    std::optional<bool> value; // nullopt: undefined on this instance
    std::string detail;        // e.g. a set separating two families
};

enum class ClauseKind { holds, iff, implies };

struct Clause {
    ClauseKind kind = ClauseKind::holds;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::optional<std::size_t> guard; // clause only applies when this condition is true
    bool satisfied = true;
};

enum class Verdict { holds, violated, hypothesis_not_met };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

struct ConditionReport {
    std::string statement;
    json instance;
    std::string hypothesis;
    bool hypothesis_met = false;
    std::vector<Condition> conditions;
    std::vector<Clause> clauses;
    Verdict verdict = Verdict::hypothesis_not_met;
    std::optional<std::string> witness;

    std::string clause_text(const Clause& c) const
    {
        const std::string& a = conditions[c.lhs].label;
        std::string s;
        switch (c.kind) {
        case ClauseKind::holds: s = a; break;
        case ClauseKind::iff: s = a + " <=> " + conditions[c.rhs].label; break;
        case ClauseKind::implies: s = a + " => " + conditions[c.rhs].label; break;
        }
        if (c.guard) {
            s = "if " + conditions[*c.guard].label + ": " + s;
        }
        return s;
    }
};

/// Builder for a ConditionReport: conditions first, then clauses.
class Evaluation {
  public:
    void hypothesis(std::string text, bool met)
    {
        hypothesis_ = std::move(text);
        met_ = met;
    }

    std::size_t condition(std::string label, std::string text, std::optional<bool> value, std::string detail = {})
    {
        conditions_.push_back(Condition{std::move(label), std::move(text), value, std::move(detail)});
        return conditions_.size() - 1;
    }

    void holds(std::size_t c, std::optional<std::size_t> guard = std::nullopt)
    {
        clauses_.push_back(Clause{ClauseKind::holds, c, c, guard});
    }
    void iff(std::size_t a, std::size_t b, std::optional<std::size_t> guard = std::nullopt)
    {
        clauses_.push_back(Clause{ClauseKind::iff, a, b, guard});
    }
    void implies(std::size_t a, std::size_t b, std::optional<std::size_t> guard = std::nullopt)
    {
        clauses_.push_back(Clause{ClauseKind::implies, a, b, guard});
    }

    ConditionReport finish(std::string statement, json instance) &&
    {
        ConditionReport r;
        r.statement = std::move(statement);
        r.instance = std::move(instance);
        r.hypothesis = std::move(hypothesis_);
        r.hypothesis_met = met_;
        r.conditions = std::move(conditions_);
        r.clauses = std::move(clauses_);

        bool all = true;
        std::string witness;
        for (Clause& c : r.clauses) {
            c.satisfied = evaluate(r.conditions, c);
            if (!c.satisfied) {
                all = false;
                for (std::size_t idx : {c.lhs, c.rhs}) {
                    const Condition& cond = r.conditions[idx];
                    if (!cond.detail.empty() && witness.find(cond.detail) == std::string::npos) {
                        witness += (witness.empty() ? "" : "; ") + cond.label + ": " + cond.detail;
                    }
                }
            }
        }
        if (!r.hypothesis_met) {
            r.verdict = Verdict::hypothesis_not_met;
        } else if (all) {
            r.verdict = Verdict::holds;
        } else {
            r.verdict = Verdict::violated;
            if (!witness.empty()) {
                r.witness = witness;
            }
        }
        return r;
    }

  private:
    static bool evaluate(const std::vector<Condition>& conds, const Clause& c)
    {
        if (c.guard) {
            const auto& g = conds[*c.guard].value;
            if (!g) {
                return false;
            }
            if (!*g) {
                return true;
            }
        }
        const auto& a = conds[c.lhs].value;
        const auto& b = conds[c.rhs].value;
        if (!a || !b) {
            return false;
        }
        switch (c.kind) {
        case ClauseKind::holds: return *a;
        case ClauseKind::iff: return *a == *b;
        case ClauseKind::implies: return !*a || *b;
        }
        return false;
    }

    std::string hypothesis_;
    bool met_ = false;
    std::vector<Condition> conditions_;
    std::vector<Clause> clauses_;
};

// ---------------------------------------------------------------------------
// Condition helpers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string family_diff(const SetFamily& a, const SetFamily& b, std::string_view name_a,
                               std::string_view name_b, const GroundSet& ground)
{
    for (Subset s : a) {
        if (!b.contains(s)) {
            return to_string(s, ground) + " is in " + std::string(name_a) + " but not in " + std::string(name_b);
        }
    }
    for (Subset s : b) {
        if (!a.contains(s)) {
            return to_string(s, ground) + " is in " + std::string(name_b) + " but not in " + std::string(name_a);
        }
    }
    return {};
}

inline std::string relation_diff(const Quasiorder& a, const Quasiorder& b, std::string_view name_a,
                                 std::string_view name_b, const GroundSet& ground)
{
    for (int pass = 0; pass < 2; ++pass) {
        const Quasiorder& p = pass == 0 ? a : b;
        const Quasiorder& q = pass == 0 ? b : a;
        for (std::size_t x = 0; x < p.size(); ++x) {
            for (std::size_t y = 0; y < p.size(); ++y) {
                if (p.leq(x, y) && !q.leq(x, y)) {
                    return "(" + ground.label(x) + "," + ground.label(y) + ") is in "
                           + std::string(pass == 0 ? name_a : name_b) + " but not in "
                           + std::string(pass == 0 ? name_b : name_a);
                }
            }
        }
    }
    return {};
}

inline std::size_t family_equal(Evaluation& e, std::string label, std::string text, const SetFamily& a,
                                const SetFamily& b, std::string_view na, std::string_view nb, const GroundSet& g)
{
    const bool eq = a == b;
    return e.condition(std::move(label), std::move(text), eq, eq ? std::string{} : family_diff(a, b, na, nb, g));
}

inline std::size_t family_included(Evaluation& e, std::string label, std::string text, const SetFamily& a,
                                   const SetFamily& b, std::string_view na, std::string_view nb,
                                   const GroundSet& g)
{
    std::string detail;
    for (Subset s : a) {
        if (!b.contains(s)) {
            detail = to_string(s, g) + " is in " + std::string(na) + " but not in " + std::string(nb);
            break;
        }
    }
    return e.condition(std::move(label), std::move(text), detail.empty(), detail);
}

inline std::string subset_text(std::optional<Subset> s, const GroundSet& g)
{
    return s ? to_string(*s, g) : std::string("undefined");
}

inline bool has_nonempty_member(const SetFamily& f)
{
    return std::any_of(f.begin(), f.end(), [](Subset s) { return !s.empty(); });
}

/// The derived structures of a family A on X used by the family statements.
struct FamilyContext {
    const GroundSet& ground;
    const SetFamily& family;
    SetFamily mu;        // mu[A]
    SetFamily mu_tilde;  // mu~[A]
    Quasiorder q_fam;    // <=A
    Quasiorder q_mu;     // <=mu[A]
    Quasiorder q_tilde;  // <=mu~[A]
    SetFamily tau_fam;   // tau[<=A]
    SetFamily tau_mu;    // tau[<=mu[A]]
    SetFamily tau_tilde; // tau[<=mu~[A]]
    std::optional<Subset> cap; // I(A)

    FamilyContext(const GroundSet& g, const SetFamily& a, const Limits& limits)
        : ground(g)
        , family(a)
        , mu(mu_of_family(a, g).opens())
        , mu_tilde(mu_tilde_of_family(a, g, limits).opens())
        , q_fam(quasiorder_from_family(a, g))
        , q_mu(quasiorder_from_family(mu, g))
        , q_tilde(quasiorder_from_family(mu_tilde, g))
        , tau_fam(specialization_topology(q_fam, limits))
        , tau_mu(specialization_topology(q_mu, limits))
        , tau_tilde(specialization_topology(q_tilde, limits))
        , cap(try_cap_I(a))
    {}
};

/// The derived structures of a space, computed on first use.
class SpaceContext {
  public:
    SpaceContext(const GenTopology& t, const Limits& limits) : t_(t), limits_(limits) {}

    const GenTopology& space() const { return t_; }
    const GroundSet& ground() const { return t_.carrier(); }

    const SetFamily& dense() const { return memo(dense_, [&] { return dense_family(t_, limits_); }); }
    const SetFamily& dense_open() const { return memo(dense_open_, [&] { return dense_open_family(t_); }); }
    Subset iso() const { return isolated_points(t_); }
    bool non_indiscrete() const { return !is_indiscrete(t_); }
    Subset non_nowhere_dense() const { return non_nowhere_dense_points(t_); }

    /// mu[D] (= mu~[D] = D plus the empty set).
    const SetFamily& mu_dense() const
    {
        return memo(mu_dense_, [&] { return mu_of_family(dense(), ground()).opens(); });
    }
    const SetFamily& tau_dense() const
    {
        return memo(tau_dense_, [&] {
            return specialization_topology(quasiorder_from_family(dense(), ground()), limits_);
        });
    }
    const SetFamily& mu_tilde_dense_open() const
    {
        return memo(mt_do_, [&] { return mu_tilde_of_family(dense_open(), ground(), limits_).opens(); });
    }
    const SetFamily& tau_tilde_dense_open() const
    {
        return memo(tau_mt_do_, [&] {
            return specialization_topology(quasiorder_from_family(mu_tilde_dense_open(), ground()), limits_);
        });
    }
    bool fd() const { return memo(fd_, [&] { return f_d(t_, limits_); }); }
    bool fd_t() const { return memo(fd_t_, [&] { return f_d_T(t_, limits_); }); }
    bool resolvable() const { return memo(resolvable_, [&] { return is_resolvable(t_, limits_); }); }

    bool is_pair_indiscrete() const
    {
        return t_.opens() == SetFamily{Subset{}, t_.whole()};
    }

    const Limits& limits() const { return limits_; }

  private:
    template <typename T, typename Fn>
    static const T& memo(std::optional<T>& slot, Fn&& fn)
    {
        if (!slot) {
            slot = fn();
        }
        return *slot;
    }

    const GenTopology& t_;
    const Limits& limits_;
    mutable std::optional<SetFamily> dense_, dense_open_, mu_dense_, tau_dense_, mt_do_, tau_mt_do_;
    mutable std::optional<bool> fd_, fd_t_, resolvable_;
};

inline bool is_discrete_family(const SetFamily& f, const GroundSet& g)
{
    return f.size() == (std::size_t{1} << g.size()) && f.span() == g.whole();
}

inline bool alexandroff(const SetFamily& f, const GroundSet& g) { return classify(f, g).alexandroff; }

// ---- family statements ---------------------------------------------------

inline void base_hypothesis(Evaluation& e, const SetFamily& a)
{
    e.hypothesis("A is nonempty and A != {{}}", has_nonempty_member(a));
}

inline void eval_P3_3(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    base_hypothesis(e, in.family);

    const SetFamily by_definition = c.mu | supersets_of_nonempty_members(in.family, g, lim);
    e.holds(family_equal(e, "(1)", "mu~[A] = {} + supersets of nonempty members of A", by_definition, c.mu_tilde,
                         "mu[A] + supersets", "mu~[A]", g));

    const auto i_mu = try_cap_I(c.mu);
    const auto i_mt = try_cap_I(c.mu_tilde);
    std::optional<bool> eq2;
    if (c.cap && i_mu && i_mt) {
        eq2 = *c.cap == *i_mu && *c.cap == *i_mt;
    }
    e.holds(e.condition("(2)", "I(A) = I(mu[A]) = I(mu~[A])", eq2,
                        "I(A)=" + subset_text(c.cap, g) + ", I(mu[A])=" + subset_text(i_mu, g)
                            + ", I(mu~[A])=" + subset_text(i_mt, g)));

    std::optional<bool> in_mu, in_mt;
    if (c.cap) {
        in_mu = c.mu.contains(*c.cap);
        in_mt = c.mu_tilde.contains(*c.cap);
    }
    e.iff(e.condition("(3a)", "I(A) in mu[A]", in_mu), e.condition("(3b)", "I(A) in mu~[A]", in_mt));

    bool p4 = true;
    bool p5 = true;
    std::string d5;
    for (std::size_t x = 0; x < g.size(); ++x) {
        const auto na = neighborhoods(in.family, x);
        const auto nm = neighborhoods(c.mu, x);
        const auto nt = neighborhoods(c.mu_tilde, x);
        p4 = p4 && (na.basis.empty() == nm.basis.empty());
        if (!na.basis.empty()) {
            const bool ok = !nt.basis.empty() && nt.core->subset_of(*na.core) && na.core == nm.core;
            if (!ok && p5) {
                d5 = "fails at x=" + g.label(x);
            }
            p5 = p5 && ok;
        }
    }
    e.holds(e.condition("(4)", "for all x: B_A(x) nonempty iff B_mu[A](x) nonempty", p4));
    e.holds(e.condition("(5)", "for x with B_A(x) nonempty: B_mu~[A](x) nonempty and I_mu~[A](x) <= I_A(x) = I_mu[A](x)",
                        p5, d5));
}

inline void eval_P3_4(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    base_hypothesis(e, in.family);

    const Quasiorder via_b = quasiorder_from_neighbourhoods(in.family, g);
    e.holds(e.condition("(1)", "x <=A y iff B_A(x) is included in B_A(y)", via_b == c.q_fam,
                        relation_diff(c.q_fam, via_b, "<=A", "B-inclusion", g)));
    e.holds(e.condition("(2a)", "<=mu~[A] is included in <=A", c.q_tilde.subset_of(c.q_fam),
                        relation_diff(c.q_tilde, c.q_fam, "<=mu~[A]", "<=A", g)));
    e.holds(e.condition("(2b)", "<=A = <=mu[A]", c.q_fam == c.q_mu, relation_diff(c.q_fam, c.q_mu, "<=A", "<=mu[A]", g)));

    bool p3 = true;
    std::string d3;
    for (std::size_t x = 0; x < g.size(); ++x) {
        const auto nb = neighborhoods(in.family, x);
        if (nb.core && *nb.core != up_set(c.q_fam, x)) {
            if (p3) {
                d3 = "I_A(" + g.label(x) + ")=" + to_string(*nb.core, g) + " but up(<=A," + g.label(x)
                     + ")=" + to_string(up_set(c.q_fam, x), g);
            }
            p3 = false;
        }
    }
    e.holds(e.condition("(3)", "I_A(x) = up(<=A, x) whenever B_A(x) is nonempty", p3, d3));

    std::optional<bool> p4;
    if (c.cap) {
        bool ok = c.tau_fam.contains(*c.cap);
        c.cap->for_each([&](std::size_t z) { ok = ok && up_set(c.q_fam, z) == *c.cap; });
        p4 = ok;
    }
    e.holds(e.condition("(4)", "up(<=A, z) = I(A) for z in I(A), and I(A) in tau[<=A]", p4));

    e.holds(family_included(e, "(5)", "mu[A] is included in tau[<=A]", c.mu, c.tau_fam, "mu[A]", "tau[<=A]", g));
}

inline void eval_T3_6(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    base_hypothesis(e, in.family);
    e.holds(family_equal(e, "(1a)", "tau[<=A] = tau[<=mu[A]]", c.tau_fam, c.tau_mu, "tau[<=A]", "tau[<=mu[A]]", g));
    e.holds(family_included(e, "(1b)", "tau[<=mu[A]] is included in tau[<=mu~[A]]", c.tau_mu, c.tau_tilde,
                            "tau[<=mu[A]]", "tau[<=mu~[A]]", g));
    const auto a = family_equal(e, "(2a)", "tau[<=A] = tau[<=mu~[A]]", c.tau_fam, c.tau_tilde, "tau[<=A]",
                                "tau[<=mu~[A]]", g);
    const auto b = e.condition("(2b)", "<=A is included in <=mu~[A]", c.q_fam.subset_of(c.q_tilde),
                               relation_diff(c.q_fam, c.q_tilde, "<=A", "<=mu~[A]", g));
    e.iff(a, b);
}

inline void eval_T3_7(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    base_hypothesis(e, in.family);

    bool cond_i = in.family.span() == g.whole();
    std::string d1 = cond_i ? "" : "union of A is " + to_string(in.family.span(), g);
    for (std::size_t x = 0; x < g.size() && cond_i; ++x) {
        const auto nb = neighborhoods(in.family, x);
        if (!nb.core || !c.mu.contains(*nb.core)) {
            cond_i = false;
            d1 = "I_A(" + g.label(x) + ")=" + subset_text(nb.core, g) + " is not in mu[A]";
        }
    }
    const auto i = e.condition("(i)", "union of A = X and I_A(x) in mu[A] for every x", cond_i, d1);
    const auto ii = family_equal(e, "(ii)", "tau[<=A] = mu[A]", c.tau_fam, c.mu, "tau[<=A]", "mu[A]", g);
    const auto iii = e.condition("(iii)", "mu[A] is an Alexandroff topology", alexandroff(c.mu, g));
    e.iff(i, ii);
    e.iff(ii, iii);
}

inline void eval_C3_8(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    base_hypothesis(e, in.family);
    const auto a = family_equal(e, "(a)", "tau[<=A] = mu[A]", c.tau_fam, c.mu, "tau[<=A]", "mu[A]", g);
    const auto b = e.condition("(b)", "mu[A] is a topology", classify(c.mu, g).topology);
    e.iff(a, b);
}

inline void eval_T3_9(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    e.hypothesis("A is nonempty, A != {{}} and I(A) is empty", c.cap && c.cap->empty());
    e.holds(e.condition("(a)", "tau[<=mu~[A]] is discrete", is_discrete_family(c.tau_tilde, g)));
}

inline void eval_T3_10_conditions(const FamilyContext& c, Evaluation& e, const Limits& lim)
{
    const auto& g = c.ground;
    std::optional<bool> w, ii, iii, d;
    std::string dw, diii;
    if (c.cap) {
        const Subset wm = weakly_maximal_elements(c.q_fam);
        w = wm == *c.cap;
        if (!*w) {
            dw = "I(A)=" + to_string(*c.cap, g) + " but weakly maximal elements are " + to_string(wm, g);
        }
        ii = c.mu.contains(*c.cap);
        const SetFamily sup = superset_topology(*c.cap, g, lim).opens();
        iii = sup == c.mu_tilde;
        diii = family_diff(c.mu_tilde, sup, "mu~[A]", "super(I(A))", g);
        d = is_dense(GenTopology(g, c.tau_tilde), *c.cap);
    }
    e.holds(e.condition("(w)", "I(A) is the set of weakly <=A-maximal elements", w, dw));
    const auto i = family_equal(e, "(i)", "tau[<=mu~[A]] = mu~[A]", c.tau_tilde, c.mu_tilde, "tau[<=mu~[A]]",
                                "mu~[A]", g);
    const auto j = e.condition("(ii)", "I(A) in mu[A]", ii);
    const auto k = e.condition("(iii)", "mu~[A] = super(I(A))", iii, diii);
    const auto l = e.condition("(iv)", "mu~[A] is an Alexandroff topology", alexandroff(c.mu_tilde, g));
    e.iff(i, j);
    e.iff(j, k);
    e.iff(k, l);
    e.holds(e.condition("(d)", "I(A) is dense in tau[<=mu~[A]]", d));
}

inline void eval_T3_10(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    e.hypothesis("A is nonempty, A != {{}} and I(A) is nonempty", c.cap && !c.cap->empty());
    eval_T3_10_conditions(c, e, lim);
}

inline void eval_T3_10_nohyp(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    base_hypothesis(e, in.family);
    eval_T3_10_conditions(c, e, lim);
}

inline void eval_T3_10i_always(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    base_hypothesis(e, in.family);
    e.holds(family_equal(e, "(i)", "tau[<=mu~[A]] = mu~[A]", c.tau_tilde, c.mu_tilde, "tau[<=mu~[A]]", "mu~[A]",
                         in.ground));
}

inline void eval_C3_11(const FamilyInstance& in, const Limits& lim, Evaluation& e, bool converse)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    e.hypothesis("A is nonempty, A != {{}} and I(A) is nonempty", c.cap && !c.cap->empty());
    const auto a = family_equal(e, "(a)", "tau[<=A] = mu[A]", c.tau_fam, c.mu, "tau[<=A]", "mu[A]", g);
    const auto b = family_equal(e, "(b)", "tau[<=mu~[A]] = mu~[A]", c.tau_tilde, c.mu_tilde, "tau[<=mu~[A]]",
                                "mu~[A]", g);
    if (converse) {
        e.implies(b, a);
    } else {
        e.implies(a, b);
    }
}

inline void eval_T3_13(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    e.hypothesis("I(A) is nonempty and tau[<=A] = mu~[A]",
                 c.cap && !c.cap->empty() && c.tau_fam == c.mu_tilde);
    e.holds(e.condition("(a)", "<=A = <=mu~[A]", c.q_fam == c.q_tilde,
                        relation_diff(c.q_fam, c.q_tilde, "<=A", "<=mu~[A]", g)));
}

inline void eval_R3_14(const FamilyInstance& in, const Limits& lim, Evaluation& e)
{
    const FamilyContext c(in.ground, in.family, lim);
    const auto& g = in.ground;
    e.hypothesis("A = {{}} and X is nonempty", in.family == SetFamily{Subset{}} && !g.empty());
    const SetFamily only_empty{Subset{}};
    e.holds(family_equal(e, "(a)", "mu[A] = {{}}", c.mu, only_empty, "mu[A]", "{{}}", g));
    e.holds(family_equal(e, "(b)", "mu~[A] = {{}}", c.mu_tilde, only_empty, "mu~[A]", "{{}}", g));
    e.holds(e.condition("(c)", "<=mu~[A] = X x X", c.q_tilde == Quasiorder::full(g.size())));
    e.holds(family_equal(e, "(d)", "tau[<=mu~[A]] = {{}, X}", c.tau_tilde, SetFamily{Subset{}, g.whole()},
                         "tau[<=mu~[A]]", "{{}, X}", g));
    bool undefined = false;
    try {
        (void)cap_I(in.family);
    } catch (const UndefinedIntersection&) {
        undefined = true;
    }
    e.holds(e.condition("(e)", "I(A) is undefined", undefined));
}

// ---- order statements ----------------------------------------------------

inline void eval_L3_5(const OrderPairInstance& in, const Limits& lim, Evaluation& e)
{
    e.hypothesis("two quasiorders on X", true);
    const auto a = e.condition("(a)", "<=* is included in <=", in.finer.subset_of(in.order),
                               relation_diff(in.finer, in.order, "<=*", "<=", in.ground));
    const SetFamily t = specialization_topology(in.order, lim);
    const SetFamily ts = specialization_topology(in.finer, lim);
    const auto b = family_included(e, "(b)", "tau[<=] is included in tau[<=*]", t, ts, "tau[<=]", "tau[<=*]",
                                   in.ground);
    e.iff(a, b);
}

inline void eval_P2_13(const OrderInstance& in, const Limits& lim, Evaluation& e)
{
    const auto& g = in.ground;
    const Quasiorder& q = in.order;
    const Subset m = maximal_elements(q);
    bool every_below_max = true;
    for (std::size_t x = 0; x < q.size(); ++x) {
        every_below_max = every_below_max && up_set(q, x).meets(m);
    }
    e.hypothesis("every x lies below some maximal element", every_below_max);
    const GenTopology t(g, specialization_topology(q, lim));
    const Subset iso = isolated_points(t);
    e.holds(e.condition("(a)", "M = Iso(tau[<=])", m == iso,
                        m == iso ? "" : "M=" + to_string(m, g) + ", Iso=" + to_string(iso, g)));
    e.holds(e.condition("(b)", "tau[<=] is iso-dense", is_iso_dense(t)));
    const SetFamily sup = superset_topology(m, g, lim).opens();
    const SetFamily d0 = dense_family(t, lim).with(Subset{});
    e.holds(family_equal(e, "(c)", "D(tau[<=]) + {{}} = super(M)", d0, sup, "D+{}", "super(M)", g));
    e.holds(e.condition("(d)", "super(M) is an Alexandroff topology", alexandroff(sup, g)));
}

// ---- space statements ----------------------------------------------------

inline void eval_P2_6(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    const auto& g = t.carrier();
    e.hypothesis("mu is strong (X is open)", t.is_open(t.whole()));
    bool prop = true;
    for (Subset u : t.opens()) {
        for (Subset d : s.dense_open()) {
            prop = prop && t.is_open(u & d);
        }
    }
    const auto p = e.condition("(p)", "U & D is open for every open U and dense open D", prop);
    const auto c = e.condition("(c)", "DO + {{}} is a topology", classify(s.dense_open().with(Subset{}), g).topology);
    const auto tt = e.condition("(t)", "mu is a topology", classify(t).topology);
    e.implies(p, c);
    e.implies(tt, c);
}

inline void eval_P2_7(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    const auto& g = t.carrier();
    e.hypothesis("mu is a generalized topology", true);
    const SetFamily sup = superset_topology(s.iso(), g, lim).opens();
    e.holds(family_included(e, "(a)", "D is included in super(Iso)", s.dense(), sup, "D", "super(Iso)", g));
    const auto n = e.condition("(n)", "X is not indiscrete", s.non_indiscrete());
    const auto b = e.condition("(b)", "X is iso-dense", is_iso_dense(t), "Iso=" + to_string(s.iso(), g));
    const auto c = family_equal(e, "(c)", "super(Iso) = D + {{}}", sup, s.dense().with(Subset{}), "super(Iso)", "D+{}", g);
    e.iff(b, c, n);
}

inline void eval_P4_4(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    const auto& g = t.carrier();
    e.hypothesis("X is not indiscrete", s.non_indiscrete());
    const auto i_d = try_cap_I(s.dense());
    const auto i_do = try_cap_I(s.dense_open());
    const Subset iso = s.iso();
    const Subset ndp = s.non_nowhere_dense();

    std::optional<bool> v1, v2, v3, v4, v5;
    if (i_d) {
        v1 = *i_d == iso && t.is_open(*i_d);
        v5 = s.mu_dense() == superset_topology(*i_d, g, lim).opens();
    }
    if (i_do) {
        v2 = *i_do == ndp;
        v3 = iso.subset_of(*i_do);
        v4 = *i_do == iso;
    }
    const std::string ids = "I(D)=" + subset_text(i_d, g) + ", I(DO)=" + subset_text(i_do, g) + ", Iso="
                            + to_string(iso, g) + ", non-nowhere-dense points=" + to_string(ndp, g);
    e.holds(e.condition("(i)", "I(D) = Iso and I(D) is open", v1, ids));
    e.holds(e.condition("(ii)", "I(DO) = {x : {x} not nowhere dense}", v2, ids));
    e.holds(e.condition("(iii)", "Iso is included in I(DO)", v3, ids));
    const auto h = e.condition("(iv-h)", "X is T1, or an Alexandroff T0 topology",
                               is_T1(t) || (classify(t).alexandroff && is_T0(t)));
    e.holds(e.condition("(iv)", "I(DO) = Iso", v4, ids), h);
    const auto iso_dense = e.condition("(iso)", "X is iso-dense", is_iso_dense(t), "Iso=" + to_string(iso, g));
    e.iff(iso_dense, e.condition("(v)", "mu[D] = super(I(D))", v5), std::nullopt);
}

inline void eval_T4_7(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    const auto& g = t.carrier();
    e.hypothesis("X is not indiscrete", s.non_indiscrete());
    const auto a = e.condition("(i-h)", "X is dense-in-itself", is_dense_in_itself(t));
    const auto b = e.condition("(i)", "tau[<=D] is discrete", is_discrete_family(s.tau_dense(), g));
    bool all_nd = true;
    for (std::size_t x = 0; x < g.size(); ++x) {
        all_nd = all_nd && is_nowhere_dense(t, Subset::singleton(x));
    }
    const auto c = e.condition("(ii-h)", "every singleton is nowhere dense", all_nd);
    const auto d = e.condition("(ii)", "tau[<=mu~[DO]] is discrete", is_discrete_family(s.tau_tilde_dense_open(), g));
    e.implies(a, b);
    e.implies(c, d);
}

inline void eval_T4_8_conditions(const SpaceContext& s, Evaluation& e)
{
    const auto& g = s.ground();
    const auto i = family_equal(e, "(i)", "tau[<=D] = mu[D]", s.tau_dense(), s.mu_dense(), "tau[<=D]", "mu[D]", g);
    const auto ii = e.condition("(ii)", "mu[D] is an Alexandroff topology", alexandroff(s.mu_dense(), g));
    const auto iii = e.condition("(iii)", "X is iso-dense", is_iso_dense(s.space()),
                                 "Iso=" + to_string(s.iso(), g));
    e.iff(i, ii);
    e.iff(ii, iii);
}

inline void eval_T4_8(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("X is not indiscrete", s.non_indiscrete());
    eval_T4_8_conditions(s, e);
}

inline void eval_T4_8_nohyp(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("mu is a generalized topology (indiscrete allowed)", true);
    eval_T4_8_conditions(s, e);
}

/// Conditions (i)-(iv) about mu~[DO]; returns their indices.
inline std::vector<std::size_t> t4_9_conditions(const SpaceContext& s, Evaluation& e)
{
    const auto& g = s.ground();
    const Subset ndp = s.non_nowhere_dense();
    const SetFamily sup = superset_topology(ndp, g, s.limits()).opens();
    return {
        family_equal(e, "(i)", "tau[<=mu~[DO]] = mu~[DO]", s.tau_tilde_dense_open(), s.mu_tilde_dense_open(),
                     "tau[<=mu~[DO]]", "mu~[DO]", g),
        e.condition("(ii)", "{x : {x} not nowhere dense} is dense and open", s.dense_open().contains(ndp),
                    "{x : {x} not nowhere dense}=" + to_string(ndp, g)),
        family_equal(e, "(iii)", "mu~[DO] = super({x : {x} not nowhere dense})", s.mu_tilde_dense_open(), sup,
                     "mu~[DO]", "super(...)", g),
        e.condition("(iv)", "mu~[DO] is an Alexandroff topology", alexandroff(s.mu_tilde_dense_open(), g)),
    };
}

inline void eval_T4_9(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("X is not indiscrete", s.non_indiscrete());
    const auto c = t4_9_conditions(s, e);
    e.iff(c[0], c[1]);
    e.iff(c[1], c[2]);
    e.iff(c[2], c[3]);
}

inline void eval_C4_12(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("X is T1 and mu != {{}}", is_T1(t) && t.opens() != SetFamily{Subset{}});
    const auto iso = e.condition("(iso)", "X is iso-dense", is_iso_dense(t), "Iso=" + to_string(s.iso(), t.carrier()));
    for (std::size_t c : t4_9_conditions(s, e)) {
        e.iff(iso, c);
    }
}

inline void eval_P5_3(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("mu is a generalized topology", true);
    const auto a = e.condition("(a)", "X is iso-dense", is_iso_dense(t));
    const auto b = e.condition("(b)", "F_d", s.fd());
    const auto c = e.condition("(c)", "F_d^T", s.fd_t());
    e.implies(a, b);
    e.implies(b, c);
}

inline void eval_P5_4_conditions(const SpaceContext& s, Evaluation& e)
{
    const auto a = e.condition("(a)", "F_d^T", s.fd_t());
    const auto b = e.condition("(b)", "F_d", s.fd(), s.fd() ? "" : "mu=" + to_string(s.space().opens(), s.ground()));
    const auto r = e.condition("(r)", "X is resolvable and not indiscrete", s.resolvable() && s.non_indiscrete());
    const auto c = e.condition("(c)", "F_d^T is false", !s.fd_t());
    e.iff(a, b);
    e.implies(r, c);
}

inline void eval_P5_4(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("mu != {{}, X}", !s.is_pair_indiscrete());
    eval_P5_4_conditions(s, e);
}

inline void eval_P5_4_nohyp(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("mu is a generalized topology ({{}, X} allowed)", true);
    eval_P5_4_conditions(s, e);
}

inline void eval_C5_5(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("X is T0", is_T0(t));
    e.iff(e.condition("(a)", "F_d", s.fd()), e.condition("(b)", "F_d^T", s.fd_t()));
}

inline void eval_C5_6(const GenTopology& t, const Limits& lim, Evaluation& e)
{
    const SpaceContext s(t, lim);
    e.hypothesis("mu is a generalized topology", true);
    const auto a = e.condition("(a)", "F_d^T holds and F_d fails", s.fd_t() && !s.fd());
    const auto b = e.condition("(b)", "|X| >= 2 and mu = {{}, X}", t.size() >= 2 && s.is_pair_indiscrete());
    e.implies(a, b);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct StatementInfo {
    std::string_view id;
    InstanceKind kind;
    std::string_view summary;
    /// Weakened or converse variants whose counterexamples are expected.
    bool expected_false = false;
};

namespace detail {

using Evaluator = std::function<void(const Instance&, const Limits&, Evaluation&)>;

struct CatalogEntry {
    StatementInfo info;
    Evaluator evaluate;
};

template <typename T, typename Fn>
Evaluator adapt(Fn fn)
{
    return [fn](const Instance& inst, const Limits& lim, Evaluation& e) { fn(std::get<T>(inst), lim, e); };
}

inline const std::vector<CatalogEntry>& catalog_entries()
{
    using K = InstanceKind;
    static const std::vector<CatalogEntry> entries = {
        {{"P2.6", K::space, "strong space with U & D open for open U, dense open D: DO + {} is a topology"},
         adapt<GenTopology>(eval_P2_6)},
        {{"P2.7", K::space, "D is inside super(Iso); non-indiscrete: iso-dense iff super(Iso) = D + {}"},
         adapt<GenTopology>(eval_P2_7)},
        {{"P2.13", K::quasiorder, "every point below a maximal one: M = Iso, iso-dense, D + {} = super(M)"},
         adapt<OrderInstance>(eval_P2_13)},
        {{"P3.3", K::family, "basic identities of mu~[A] and I(A)"}, adapt<FamilyInstance>(eval_P3_3)},
        {{"P3.4", K::family, "<=A via neighbourhoods, <=mu~[A] inside <=A = <=mu[A], mu[A] inside tau[<=A]"},
         adapt<FamilyInstance>(eval_P3_4)},
        {{"L3.5", K::quasiorder_pair, "<=* inside <= iff tau[<=] inside tau[<=*]"},
         adapt<OrderPairInstance>(eval_L3_5)},
        {{"T3.6", K::family, "tau[<=A] = tau[<=mu[A]] inside tau[<=mu~[A]], equality iff <=A inside <=mu~[A]"},
         adapt<FamilyInstance>(eval_T3_6)},
        {{"T3.7", K::family, "tau[<=A] = mu[A] iff mu[A] is Alexandroff iff local cores are open"},
         adapt<FamilyInstance>(eval_T3_7)},
        {{"C3.8", K::family, "finite A: tau[<=A] = mu[A] iff mu[A] is a topology"}, adapt<FamilyInstance>(eval_C3_8)},
        {{"T3.9", K::family, "I(A) empty: tau[<=mu~[A]] is discrete"}, adapt<FamilyInstance>(eval_T3_9)},
        {{"T3.10", K::family, "I(A) nonempty: weakly maximal = I(A); four equivalent conditions on mu~[A]"},
         adapt<FamilyInstance>(eval_T3_10)},
        {{"C3.11", K::family, "I(A) nonempty and tau[<=A] = mu[A] imply tau[<=mu~[A]] = mu~[A]"},
         adapt<FamilyInstance>([](const FamilyInstance& i, const Limits& l, Evaluation& e) {
             eval_C3_11(i, l, e, false);
         })},
        {{"T3.13", K::family, "I(A) nonempty and tau[<=A] = mu~[A] imply <=A = <=mu~[A]"},
         adapt<FamilyInstance>(eval_T3_13)},
        {{"R3.14", K::family, "A = {{}}: mu = mu~ = {{}}, tau[<=mu~[A]] indiscrete, I(A) undefined"},
         adapt<FamilyInstance>(eval_R3_14)},
        {{"P4.4", K::space, "non-indiscrete: I(D) = Iso, I(DO) = non-nowhere-dense points, ..."},
         adapt<GenTopology>(eval_P4_4)},
        {{"T4.7", K::space, "non-indiscrete: crowded => tau[<=D] discrete; nowhere dense points => tau[<=mu~[DO]] discrete"},
         adapt<GenTopology>(eval_T4_7)},
        {{"T4.8", K::space, "non-indiscrete: tau[<=D] = mu[D] iff mu[D] Alexandroff iff iso-dense"},
         adapt<GenTopology>(eval_T4_8)},
        {{"T4.9", K::space, "non-indiscrete: four equivalent conditions on mu~[DO]"}, adapt<GenTopology>(eval_T4_9)},
        {{"C4.12", K::space, "T1 and mu != {{}}: iso-dense iff each condition on mu~[DO]"},
         adapt<GenTopology>(eval_C4_12)},
        {{"P5.3", K::space, "iso-dense => F_d => F_d^T"}, adapt<GenTopology>(eval_P5_3)},
        {{"P5.4", K::space, "mu != {{}, X}: F_d iff F_d^T; resolvable non-indiscrete => not F_d^T"},
         adapt<GenTopology>(eval_P5_4)},
        {{"C5.5", K::space, "T0: F_d iff F_d^T"}, adapt<GenTopology>(eval_C5_5)},
        {{"C5.6", K::space, "F_d^T without F_d forces |X| >= 2 and mu = {{}, X}"}, adapt<GenTopology>(eval_C5_6)},

        {{"T3.10-nohyp", K::family, "T3.10 without requiring I(A) nonempty", true},
         adapt<FamilyInstance>(eval_T3_10_nohyp)},
        {{"T3.10i-always", K::family, "tau[<=mu~[A]] = mu~[A] for every admissible A", true},
         adapt<FamilyInstance>(eval_T3_10i_always)},
        {{"C3.11-converse", K::family, "I(A) nonempty and tau[<=mu~[A]] = mu~[A] imply tau[<=A] = mu[A]", true},
         adapt<FamilyInstance>([](const FamilyInstance& i, const Limits& l, Evaluation& e) {
             eval_C3_11(i, l, e, true);
         })},
        {{"T4.8-nohyp", K::space, "T4.8 with indiscrete spaces allowed", true}, adapt<GenTopology>(eval_T4_8_nohyp)},
        {{"P5.4-nohyp", K::space, "P5.4 with mu = {{}, X} allowed", true}, adapt<GenTopology>(eval_P5_4_nohyp)},
    };
    return entries;
}

inline const CatalogEntry& entry(std::string_view id)
{
    for (const auto& e : catalog_entries()) {
        if (e.info.id == id) {
            return e;
        }
    }
    throw std::invalid_argument("unknown statement \"" + std::string(id) + "\"");
}

} // namespace detail

inline std::vector<StatementInfo> catalog()
{
    std::vector<StatementInfo> out;
    for (const auto& e : detail::catalog_entries()) {
        out.push_back(e.info);
    }
    return out;
}

inline std::optional<StatementInfo> find_statement(std::string_view id)
{
    for (const auto& e : detail::catalog_entries()) {
        if (e.info.id == id) {
            return e.info;
        }
    }
    return std::nullopt;
}

/// Evaluates one statement on one instance. Throws std::invalid_argument for
/// an unknown id or an instance of the wrong kind, CapExceeded past the caps.
inline ConditionReport check(std::string_view id, const Instance& instance, const Limits& limits = {})
{
    const auto& e = detail::entry(id);
    if (kind_of(instance) != e.info.kind) {
        throw std::invalid_argument("statement " + std::string(id) + " expects a "
                                    + std::string(to_string(e.info.kind)) + " instance, got a "
                                    + std::string(to_string(kind_of(instance))));
    }
    Evaluation ev;
    e.evaluate(instance, limits, ev);
    return std::move(ev).finish(std::string(id), instance_to_json(instance));
}

// ---------------------------------------------------------------------------
// Instance streams
// ---------------------------------------------------------------------------

enum class StreamMode { exhaustive, random };

/// exhaustive: every admissible family (A nonempty, A != {{}}), every
/// generalized topology, every quasiorder or every pair of quasiorders on n
/// points, in ascending index order. random: `count` seeded samples.
struct InstanceStream {
    InstanceKind kind = InstanceKind::family;
    std::size_t n = 0;
    StreamMode mode = StreamMode::exhaustive;
    std::uint64_t seed = 1;
    std::size_t count = 0;

    static InstanceStream exhaustive(InstanceKind k, std::size_t n) { return {k, n, StreamMode::exhaustive, 1, 0}; }
    static InstanceStream random(InstanceKind k, std::size_t n, std::uint64_t seed, std::size_t count)
    {
        return {k, n, StreamMode::random, seed, count};
    }

    std::string describe() const
    {
        std::string s = mode == StreamMode::exhaustive ? "exhaustive-" : "random-";
        s += std::string(to_string(kind)) + "(n=" + std::to_string(n);
        if (mode == StreamMode::random) {
            s += ", seed=" + std::to_string(seed) + ", count=" + std::to_string(count);
        }
        return s + ")";
    }
};

inline constexpr std::size_t exhaustive_cap = 4;

namespace detail {

/// Family whose members are the subsets s with bit s set in `code`.
inline SetFamily decode_family(Mask code)
{
    std::vector<Subset> members;
    for (Mask c = code; c != 0; c &= c - 1) {
        members.emplace_back(static_cast<Mask>(std::countr_zero(c)));
    }
    return SetFamily(std::move(members));
}

inline bool code_is_gentopology(Mask code, std::size_t subsets)
{
    if ((code & 1) == 0) {
        return false;
    }
    for (std::size_t a = 0; a < subsets; ++a) {
        if (!((code >> a) & 1)) {
            continue;
        }
        for (std::size_t b = a + 1; b < subsets; ++b) {
            if (((code >> b) & 1) && !((code >> (a | b)) & 1)) {
                return false;
            }
        }
    }
    return true;
}

/// Every quasiorder on n points, ordered by the off-diagonal bit pattern.
template <typename Fn>
bool for_each_quasiorder(std::size_t n, Fn&& fn)
{
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) {
                slots.emplace_back(x, y);
            }
        }
    }
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Mask> rows(n);
        for (std::size_t x = 0; x < n; ++x) {
            rows[x] = Mask{1} << x;
        }
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if ((code >> k) & 1) {
                rows[slots[k].first] |= Mask{1} << slots[k].second;
            }
        }
        bool transitive = true;
        for (std::size_t x = 0; x < n && transitive; ++x) {
            for (Mask m = rows[x]; m != 0 && transitive; m &= m - 1) {
                transitive = (rows[static_cast<std::size_t>(std::countr_zero(m))] & ~rows[x]) == 0;
            }
        }
        if (transitive && !fn(Quasiorder::from_rows(std::move(rows)))) {
            return false;
        }
    }
    return true;
}

inline std::vector<Quasiorder> all_quasiorders(std::size_t n)
{
    std::vector<Quasiorder> out;
    for_each_quasiorder(n, [&](Quasiorder q) {
        out.push_back(std::move(q));
        return true;
    });
    return out;
}

inline Quasiorder random_quasiorder(std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && (rng() & 3) == 0) {
                pairs.emplace_back(x, y);
            }
        }
    }
    return Quasiorder::closure_of(n, pairs);
}

inline GenTopology random_gentopology(const GroundSet& g, std::mt19937_64& rng)
{
    const Mask whole = g.whole().bits();
    const std::size_t generators = static_cast<std::size_t>(rng() % 6);
    std::vector<Subset> gens;
    for (std::size_t i = 0; i < generators; ++i) {
        gens.emplace_back(rng() & whole);
    }
    if (rng() & 1) {
        gens.push_back(g.whole());
    }
    return GenTopology(g, union_closure(SetFamily(std::move(gens))));
}

inline SetFamily random_family(std::size_t n, std::mt19937_64& rng)
{
    const std::size_t subsets = std::size_t{1} << n;
    while (true) {
        const Mask code = subsets >= 64 ? rng() : rng() & low_bits(subsets);
        if (code > 1) {
            return decode_family(code);
        }
    }
}

} // namespace detail

/// Calls `fn(instance)` for each instance of the stream until it returns
/// false; returns the number of instances visited.
template <typename Fn>
std::size_t for_each_instance(const InstanceStream& s, Fn&& fn)
{
    using K = InstanceKind;
    const GroundSet g = GroundSet::numbered(s.n);
    std::size_t visited = 0;
    auto emit = [&](const Instance& inst) {
        ++visited;
        return fn(inst);
    };

    if (s.mode == StreamMode::random) {
        std::mt19937_64 rng(s.seed);
        for (std::size_t i = 0; i < s.count; ++i) {
            bool go = true;
            switch (s.kind) {
            case K::family: go = emit(FamilyInstance{g, detail::random_family(s.n, rng)}); break;
            case K::space: go = emit(detail::random_gentopology(g, rng)); break;
            case K::quasiorder: go = emit(OrderInstance{g, detail::random_quasiorder(s.n, rng)}); break;
            case K::quasiorder_pair: {
                Quasiorder a = detail::random_quasiorder(s.n, rng);
                Quasiorder b = detail::random_quasiorder(s.n, rng);
                go = emit(OrderPairInstance{g, std::move(a), std::move(b)});
                break;
            }
            }
            if (!go) {
                break;
            }
        }
        return visited;
    }

    switch (s.kind) {
    case K::family:
    case K::space: {
        const std::size_t subsets = std::size_t{1} << s.n;
        if (subsets > 32) {
            throw CapExceeded("exhaustive family enumeration", s.n, 5);
        }
        const std::uint64_t total = std::uint64_t{1} << subsets;
        for (std::uint64_t code = 0; code < total; ++code) {
            if (s.kind == K::family) {
                if (code <= 1) {
                    continue; // the empty family and {{}}
                }
                if (!emit(FamilyInstance{g, detail::decode_family(code)})) {
                    break;
                }
            } else if (detail::code_is_gentopology(code, subsets)) {
                if (!emit(GenTopology(g, detail::decode_family(code)))) {
                    break;
                }
            }
        }
        break;
    }
    case K::quasiorder:
        detail::for_each_quasiorder(s.n, [&](Quasiorder q) { return emit(OrderInstance{g, std::move(q)}); });
        break;
    case K::quasiorder_pair: {
        const auto all = detail::all_quasiorders(s.n);
        bool go = true;
        for (std::size_t i = 0; i < all.size() && go; ++i) {
            for (std::size_t j = 0; j < all.size() && go; ++j) {
                go = emit(OrderPairInstance{g, all[i], all[j]});
            }
        }
        break;
    }
    }
    return visited;
}

// ---------------------------------------------------------------------------
// Sweeps and searches
// ---------------------------------------------------------------------------

struct CheckSummary {
    std::string statement;
    std::string stream;
    std::size_t n = 0;
    std::size_t instances = 0;
    std::size_t hypothesis_met = 0;
    std::size_t violation_count = 0;
    std::vector<ConditionReport> violations; // first `max_kept`, in stream order
};

/// Checks a statement on every instance of a stream.
inline CheckSummary check_all(std::string_view id, const InstanceStream& stream, const Limits& limits = {},
                              std::size_t max_kept = 16)
{
    const auto& e = detail::entry(id);
    if (e.info.kind != stream.kind) {
        throw std::invalid_argument("statement " + std::string(id) + " expects " + std::string(to_string(e.info.kind))
                                    + " instances");
    }
    CheckSummary out;
    out.statement = std::string(id);
    out.stream = stream.describe();
    out.n = stream.n;
    for_each_instance(stream, [&](const Instance& inst) {
        ++out.instances;
        ConditionReport r = check(id, inst, limits);
        if (r.hypothesis_met) {
            ++out.hypothesis_met;
        }
        if (r.verdict == Verdict::violated) {
            ++out.violation_count;
            if (out.violations.size() < max_kept) {
                out.violations.push_back(std::move(r));
            }
        }
        return true;
    });
    return out;
}

struct SearchResult {
    std::optional<ConditionReport> counterexample;
    std::vector<std::pair<std::size_t, std::size_t>> per_n; // (n, instances examined)
    std::size_t instances = 0;
    bool budget_exhausted = false;
};

/// Sweeps n = 1..n_max in canonical order and stops at the first violated
/// report. Sizes up to `exhaustive_cap` are enumerated; larger sizes draw
/// `random_count` seeded samples. `budget` bounds the total number of
/// instances examined (0 = unbounded).
inline SearchResult search_counterexample(std::string_view id, std::size_t n_max, std::size_t budget = 0,
                                          std::uint64_t seed = 1, std::size_t random_count = 10000,
                                          const Limits& limits = {}, std::size_t exhaustive_limit = exhaustive_cap)
{
    const auto& e = detail::entry(id);
    SearchResult out;
    for (std::size_t n = 1; n <= n_max && !out.counterexample && !out.budget_exhausted; ++n) {
        const InstanceStream stream = n <= exhaustive_limit ? InstanceStream::exhaustive(e.info.kind, n)
                                                            : InstanceStream::random(e.info.kind, n, seed, random_count);
        std::size_t here = 0;
        for_each_instance(stream, [&](const Instance& inst) {
            if (budget != 0 && out.instances >= budget) {
                out.budget_exhausted = true;
                return false;
            }
            ++out.instances;
            ++here;
            ConditionReport r = check(id, inst, limits);
            if (r.verdict == Verdict::violated) {
                out.counterexample = std::move(r);
                return false;
            }
            return true;
        });
        out.per_n.emplace_back(n, here);
    }
    return out;
}

/// Looks for a family on exactly n points where tau[<=mu~[A]] = mu~[A] holds
/// but tau[<=A] = mu[A] fails, i.e. a witness that the converse of C3.11 fails.
inline std::optional<ConditionReport> converse_probe(std::size_t n, const Limits& limits = {})
{
    std::optional<ConditionReport> found;
    for_each_instance(InstanceStream::exhaustive(InstanceKind::family, n), [&](const Instance& inst) {
        ConditionReport r = check("C3.11-converse", inst, limits);
        if (r.verdict == Verdict::violated) {
            found = std::move(r);
            return false;
        }
        return true;
    });
    return found;
}

} // namespace quasitop

#endif
