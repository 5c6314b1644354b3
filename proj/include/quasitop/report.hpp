#ifndef QUASITOP_REPORT_HPP
#define QUASITOP_REPORT_HPP

// JSON and plain-text renderings of space analyses, statement reports,
// sweep summaries and counterexample searches.

#include "json_io.hpp"
#include "order.hpp"
#include "props.hpp"
#include "theorems.hpp"
#include "topo.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace quasitop {

namespace detail {

inline json labels_json(std::initializer_list<std::size_t> idx, const GroundSet& g)
{
    json out = json::array();
    for (std::size_t i : idx) {
        out.push_back(g.label(i));
    }
    return out;
}

inline json pair_json(const SubsetPair& p, const GroundSet& g)
{
    return json::array({to_json(p.first, g), to_json(p.second, g)});
}

inline json optional_subset_json(const std::optional<Subset>& s, const GroundSet& g)
{
    return s ? to_json(*s, g) : json("undefined");
}

/// {"label": up-set, ...} in ground order, as an array of [label, up-set] pairs
/// so that the element order survives serialization.
inline json up_sets_json(const Quasiorder& q, const GroundSet& g)
{
    json out = json::array();
    for (std::size_t x = 0; x < q.size(); ++x) {
        out.push_back(json::array({g.label(x), to_json(up_set(q, x), g)}));
    }
    return out;
}

inline std::string set_text(const json& j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) {
        out += (i ? "," : "") + j[i].get<std::string>();
    }
    return out + "}";
}

inline std::string family_text(const json& j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) {
        out += (i ? ", " : "") + set_text(j[i]);
    }
    return out + "}";
}

inline std::string up_sets_text(const json& j)
{
    std::string out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out += (i ? ", " : "") + j[i][0].get<std::string>() + " -> " + set_text(j[i][1]);
    }
    return out;
}

} // namespace detail

/// Flat object of flags plus witness arrays; witnesses appear only when they exist.
inline json profile_to_json(const SpaceProfile& p, const GroundSet& g)
{
    json out{{"T0", p.t0},
             {"T1", p.t1},
             {"indiscrete", p.indiscrete},
             {"discrete", p.discrete},
             {"iso_dense", p.iso_dense},
             {"dense_in_itself", p.dense_in_itself},
             {"resolvable", p.resolvable},
             {"F_d", p.fd},
             {"F_d^T", p.fd_t}};
    if (p.t0_witness) {
        out["T0_witness"] = detail::labels_json({p.t0_witness->first, p.t0_witness->second}, g);
    }
    if (p.t1_witness) {
        out["T1_witness"] = detail::labels_json({*p.t1_witness}, g);
    }
    if (p.indiscrete_witness) {
        out["indiscrete_witness"] = to_json(*p.indiscrete_witness, g);
    }
    if (p.discrete_witness) {
        out["discrete_witness"] = detail::labels_json({*p.discrete_witness}, g);
    }
    if (p.iso_dense_witness) {
        out["iso_dense_witness"] = to_json(*p.iso_dense_witness, g);
    }
    if (p.dense_in_itself_witness) {
        out["dense_in_itself_witness"] = detail::labels_json({*p.dense_in_itself_witness}, g);
    }
    if (p.resolvable_witness) {
        out["resolvable_witness"] = detail::pair_json(*p.resolvable_witness, g);
    }
    if (p.irresolvable_witness) {
        out["irresolvable_witness"] = detail::labels_json({*p.irresolvable_witness}, g);
    }
    if (p.fd_witness) {
        out["F_d_witness"] = detail::pair_json(*p.fd_witness, g);
    }
    if (p.fd_t_witness) {
        out["F_d^T_witness"] = detail::pair_json(*p.fd_t_witness, g);
    }
    return out;
}

/// The generalized topology a document describes: the open sets themselves,
/// mu[A] for a family, tau[<=] for a quasiorder.
inline GenTopology document_space(const SpaceDocument& doc, const Limits& limits = {})
{
    switch (doc.kind) {
    case DocumentKind::open_sets: return doc.space();
    case DocumentKind::family: return mu_of_family(doc.family, doc.ground);
    case DocumentKind::quasiorder: return GenTopology(doc.ground, specialization_topology(*doc.order, limits));
    }
    return doc.space();
}

/// Everything `analyze` reports. The result re-parses as the same document
/// (the input keys are kept), so analyzing it again gives an identical report.
inline json analyze(const SpaceDocument& doc, const Limits& limits = {})
{
    const GroundSet& g = doc.ground;
    json out = document_to_json(doc);

    if (doc.kind == DocumentKind::family) {
        const SetFamily& a = doc.family;
        const SetFamily mt = mu_tilde_of_family(a, g, limits).opens();
        const Quasiorder qa = quasiorder_from_family(a, g);
        const Quasiorder qt = quasiorder_from_family(mt, g);
        out["mu[A]"] = to_json(union_closure(a), g);
        out["mu_tilde[A]"] = to_json(mt, g);
        out["I(A)"] = detail::optional_subset_json(try_cap_I(a), g);
        out["up[<=A]"] = detail::up_sets_json(qa, g);
        out["tau[<=A]"] = to_json(specialization_topology(qa, limits), g);
        out["up[<=mu_tilde[A]]"] = detail::up_sets_json(qt, g);
        out["tau[<=mu_tilde[A]]"] = to_json(specialization_topology(qt, limits), g);
    } else if (doc.kind == DocumentKind::quasiorder) {
        out["up[<=]"] = detail::up_sets_json(*doc.order, g);
        out["closure_added"] = doc.closure_added;
    }

    const GenTopology t = document_space(doc, limits);
    const SetFamily dense = dense_family(t, limits);
    const SetFamily dense_open = dense_open_family(t);
    const Quasiorder qd = quasiorder_from_family(dense, g);
    const SetFamily mt_do = mu_tilde_of_family(dense_open, g, limits).opens();
    const Quasiorder q_mt_do = quasiorder_from_family(mt_do, g);

    Subset nd_singletons;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (is_nowhere_dense(t, Subset::singleton(x))) {
            nd_singletons = nd_singletons | Subset::singleton(x);
        }
    }

    out["mu"] = to_json(t.opens(), g);
    out["classification"] = json{{"generalized_topology", true},
                                 {"strong", classify(t).strong},
                                 {"topology", classify(t).topology},
                                 {"alexandroff", classify(t).alexandroff}};
    out["Iso"] = to_json(isolated_points(t), g);
    out["D"] = to_json(dense, g);
    out["DO"] = to_json(dense_open, g);
    out["ND_singletons"] = to_json(nd_singletons, g);
    out["I(D)"] = detail::optional_subset_json(try_cap_I(dense), g);
    out["I(DO)"] = detail::optional_subset_json(try_cap_I(dense_open), g);
    out["up[<=D]"] = detail::up_sets_json(qd, g);
    out["tau[<=D]"] = to_json(specialization_topology(qd, limits), g);
    out["mu_tilde[DO]"] = to_json(mt_do, g);
    out["tau[<=mu_tilde[DO]]"] = to_json(specialization_topology(q_mt_do, limits), g);
    out["profile"] = profile_to_json(profile(t, limits), g);
    return out;
}

inline std::string render_analysis(const json& r)
{
    using detail::family_text;
    using detail::set_text;
    std::ostringstream os;
    if (r.contains("name")) {
        os << "name: " << r["name"].get<std::string>() << "\n";
    }
    os << "ground: " << set_text(r["ground"]) << "\n";
    if (r.contains("family")) {
        os << "A = " << family_text(r["family"]) << "\n";
        os << "mu[A] = " << family_text(r["mu[A]"]) << "\n";
        os << "mu_tilde[A] = " << family_text(r["mu_tilde[A]"]) << "\n";
        os << "I(A) = " << set_text(r["I(A)"]) << "\n";
        os << "up-sets of <=A: " << detail::up_sets_text(r["up[<=A]"]) << "\n";
        os << "tau[<=A] = " << family_text(r["tau[<=A]"]) << "\n";
        os << "up-sets of <=mu_tilde[A]: " << detail::up_sets_text(r["up[<=mu_tilde[A]]"]) << "\n";
        os << "tau[<=mu_tilde[A]] = " << family_text(r["tau[<=mu_tilde[A]]"]) << "\n";
        os << "space analysed below: mu[A]\n";
    } else if (r.contains("quasiorder")) {
        os << "up-sets of <=: " << detail::up_sets_text(r["up[<=]"]) << "\n";
        os << "space analysed below: tau[<=]\n";
    }
    const json& c = r["classification"];
    os << "mu = " << family_text(r["mu"]) << "\n";
    os << "strong: " << (c["strong"].get<bool>() ? "true" : "false")
       << ", topology: " << (c["topology"].get<bool>() ? "true" : "false")
       << ", Alexandroff: " << (c["alexandroff"].get<bool>() ? "true" : "false") << "\n";
    os << "Iso = " << set_text(r["Iso"]) << "\n";
    os << "D = " << family_text(r["D"]) << "\n";
    os << "DO = " << family_text(r["DO"]) << "\n";
    os << "nowhere dense singletons: " << set_text(r["ND_singletons"]) << "\n";
    os << "I(D) = " << set_text(r["I(D)"]) << "\n";
    os << "I(DO) = " << set_text(r["I(DO)"]) << "\n";
    os << "up-sets of <=D: " << detail::up_sets_text(r["up[<=D]"]) << "\n";
    os << "tau[<=D] = " << family_text(r["tau[<=D]"]) << "\n";
    os << "mu_tilde[DO] = " << family_text(r["mu_tilde[DO]"]) << "\n";
    os << "tau[<=mu_tilde[DO]] = " << family_text(r["tau[<=mu_tilde[DO]]"]) << "\n";

    const json& p = r["profile"];
    auto flag = [&](const char* name, const char* key) {
        os << name << ": " << (p[key].get<bool>() ? "true" : "false");
    };
    auto pair_witness = [&](const char* key) {
        if (p.contains(key)) {
            os << ", witness " << set_text(p[key][0]) << "/" << set_text(p[key][1]);
        }
    };
    auto set_witness = [&](const char* key, const char* what) {
        if (p.contains(key)) {
            os << ", " << what << " " << set_text(p[key]);
        }
    };
    flag("T0", "T0");
    set_witness("T0_witness", "unseparated");
    os << "\n";
    flag("T1", "T1");
    set_witness("T1_witness", "singleton not closed:");
    os << "\n";
    flag("indiscrete", "indiscrete");
    set_witness("indiscrete_witness", "open set");
    os << "\n";
    flag("discrete", "discrete");
    set_witness("discrete_witness", "non-isolated point");
    os << "\n";
    flag("iso-dense", "iso_dense");
    set_witness("iso_dense_witness", "open set missing Iso:");
    os << "\n";
    flag("dense-in-itself", "dense_in_itself");
    set_witness("dense_in_itself_witness", "isolated point");
    os << "\n";
    flag("resolvable", "resolvable");
    pair_witness("resolvable_witness");
    set_witness("irresolvable_witness", "isolated point");
    os << "\n";
    flag("F_d", "F_d");
    pair_witness("F_d_witness");
    os << "\n";
    flag("F_d^T", "F_d^T");
    pair_witness("F_d^T_witness");
    os << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Statement reports
// ---------------------------------------------------------------------------

inline json report_to_json(const ConditionReport& r)
{
    json conditions = json::array();
    for (const Condition& c : r.conditions) {
        json jc{{"label", c.label}, {"text", c.text}, {"value", nullptr}};
        if (c.value) {
            jc["value"] = *c.value;
        }
        if (!c.detail.empty()) {
            jc["detail"] = c.detail;
        }
        conditions.push_back(std::move(jc));
    }
    json clauses = json::array();
    for (const Clause& c : r.clauses) {
        clauses.push_back(json{{"relation", r.clause_text(c)}, {"satisfied", c.satisfied}});
    }
    json out{{"statement", r.statement},
             {"instance", r.instance},
             {"hypothesis", r.hypothesis},
             {"hypothesis_met", r.hypothesis_met},
             {"conditions", std::move(conditions)},
             {"clauses", std::move(clauses)},
             {"verdict", std::string(to_string(r.verdict))}};
    if (r.witness) {
        out["witness"] = *r.witness;
    }
    return out;
}

inline std::string render_report(const ConditionReport& r)
{
    std::ostringstream os;
    const auto info = find_statement(r.statement);
    os << "statement " << r.statement;
    if (info) {
        os << ": " << info->summary;
    }
    os << "\ninstance: " << r.instance.dump() << "\n";
    os << "hypothesis: " << r.hypothesis << " -- " << (r.hypothesis_met ? "met" : "not met") << "\n";
    std::size_t width = 0;
    for (const Condition& c : r.conditions) {
        width = std::max(width, c.label.size());
    }
    for (const Condition& c : r.conditions) {
        os << "  " << c.label << std::string(width - c.label.size() + 1, ' ')
           << (c.value ? (*c.value ? "true " : "false") : "undef") << "  " << c.text;
        if (!c.detail.empty()) {
            os << "  [" << c.detail << "]";
        }
        os << "\n";
    }
    if (r.hypothesis_met) {
        for (const Clause& c : r.clauses) {
            os << "  " << r.clause_text(c) << ": " << (c.satisfied ? "ok" : "FAILS") << "\n";
        }
    }
    os << "verdict: " << to_string(r.verdict) << "\n";
    if (r.witness) {
        os << "witness: " << *r.witness << "\n";
    }
    if (info && info->expected_false && r.verdict == Verdict::violated) {
        os << "note: this is a weakened or converse variant; the violation confirms the non-implication\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Sweeps and searches
// ---------------------------------------------------------------------------

inline json summary_to_json(const CheckSummary& s)
{
    json violations = json::array();
    for (const auto& r : s.violations) {
        violations.push_back(report_to_json(r));
    }
    return json{{"statement", s.statement},
                {"stream", s.stream},
                {"n", s.n},
                {"instances", s.instances},
                {"hypothesis_met", s.hypothesis_met},
                {"violation_count", s.violation_count},
                {"violations", std::move(violations)}};
}

inline json search_to_json(std::string_view id, const SearchResult& s)
{
    json per_n = json::array();
    for (auto [n, count] : s.per_n) {
        per_n.push_back(json{{"n", n}, {"instances", count}});
    }
    return json{{"statement", std::string(id)},
                {"instances", s.instances},
                {"per_n", std::move(per_n)},
                {"budget_exhausted", s.budget_exhausted},
                {"counterexample", s.counterexample ? report_to_json(*s.counterexample) : json(nullptr)}};
}

inline std::string render_search(const SearchResult& s)
{
    std::ostringstream os;
    for (auto [n, count] : s.per_n) {
        os << "n=" << n << ": " << count << " instances examined\n";
    }
    if (s.counterexample) {
        os << "counterexample found after " << s.instances << " instances:\n" << render_report(*s.counterexample);
    } else {
        os << "none found, " << s.instances << " instances";
        if (s.budget_exhausted) {
            os << " (budget exhausted)";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace quasitop

#endif
