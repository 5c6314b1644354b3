// Acceptance criteria. One PASS/FAIL line per criterion. The exit status is 0
// when the failing criteria are exactly those named by --expect-fail (none by
// default), so a known failure stays visible without masking new ones.

#include "oracles.hpp"

#include <quasitop/quasitop.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <random>
#include <string>
#include <vector>

using namespace quasitop;

namespace {

constexpr double sweep_budget_seconds = 60.0;

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

SetFamily family(const GroundSet& g, std::initializer_list<std::initializer_list<std::string_view>> sets)
{
    std::vector<Subset> m;
    for (auto s : sets) {
        m.push_back(g.subset(s));
    }
    return SetFamily(m);
}

bool valid_resolution(const GenTopology& t, const SubsetPair& p)
{
    return !p.first.meets(p.second) && (p.first | p.second) == t.whole() && oracle::is_dense(t.opens(), p.first)
           && oracle::is_dense(t.opens(), p.second);
}

GroundSet pointed_ground(std::size_t n)
{
    std::vector<std::string> labels{"x0"};
    for (std::size_t i = 1; i < n; ++i) {
        labels.push_back("y" + std::to_string(i));
    }
    return GroundSet(labels);
}

Outcome example_3_1()
{
    Outcome o;
    const GroundSet g = GroundSet::numbered(4);
    const SetFamily a = family(g, {{"1", "2"}, {"2", "3", "4"}});
    const SetFamily mu = mu_of_family(a, g).opens();
    const SetFamily mt = mu_tilde_of_family(a, g).opens();
    const Quasiorder qa = quasiorder_from_family(a, g);
    const Quasiorder qt = quasiorder_from_family(mt, g);
    const SetFamily tau_a = specialization_topology(qa);
    const SetFamily tau_t = specialization_topology(qt);

    // (i)
    o.require(mu == family(g, {{}, {"1", "2", "3", "4"}, {"1", "2"}, {"2", "3", "4"}}), "(i) mu[A]");
    o.require(to_string(mu, g) == "{{}, {1,2}, {2,3,4}, {1,2,3,4}}", "(i) mu[A] rendering");
    o.require(mt == (mu | family(g, {{"1", "2", "3"}, {"1", "2", "4"}})), "(i) mu~[A]");
    // (ii)
    o.require(up_set(qa, 0) == g.subset({"1", "2"}) && up_set(qa, 1) == g.subset({"2"})
                  && up_set(qa, 2) == g.subset({"2", "3", "4"}) && up_set(qa, 3) == g.subset({"2", "3", "4"}),
              "(ii) up-sets of <=A");
    // (iii)
    o.require(tau_a == mu.with(g.subset({"2"})), "(iii) tau[<=A]");
    o.require(tau_a == oracle::increasing_sets(oracle::order_of_family(a, 4)), "(iii) oracle");
    // (iv)
    o.require(up_set(qt, 0) == g.subset({"1", "2"}) && up_set(qt, 1) == g.subset({"2"})
                  && up_set(qt, 2) == g.subset({"2", "3"}) && up_set(qt, 3) == g.subset({"2", "4"}),
              "(iv) up-sets of <=mu~[A]");
    // (v)
    o.require(tau_t == (mt | family(g, {{"2"}, {"2", "3"}, {"2", "4"}})), "(v) tau[<=mu~[A]]");
    // (vi)
    const std::pair<const char*, const SetFamily*> structures[] = {
        {"mu[A]", &mu}, {"mu~[A]", &mt}, {"tau[<=A]", &tau_a}, {"tau[<=mu~[A]]", &tau_t}};
    for (auto [name, f] : structures) {
        const GenTopology t(g, *f);
        const auto r = resolution(t);
        o.require(oracle::is_resolvable(*f, 4) == r.has_value(), std::string("(vi) oracle disagrees on ") + name);
        if (r) {
            o.require(false, std::string("(vi) ") + name + " is resolvable: " + to_string(r->first, g) + "/"
                                 + to_string(r->second, g));
        }
    }
    return o;
}

Outcome example_2_5()
{
    Outcome o;
    const GroundSet g = GroundSet::numbered(3);
    const GenTopology t(g, family(g, {{}, {"1", "2", "3"}, {"1", "2"}, {"2", "3"}}));
    o.require(dense_open_family(t).with(Subset{}) == t.opens(), "DO + {} = mu");
    o.require(!classify(t).topology && !oracle::is_topology(t.opens(), 3), "not a topology");
    const auto r = resolution(t);
    o.require(r.has_value() && valid_resolution(t, *r), "resolvable with a valid witness");
    o.require(oracle::is_dense(t.opens(), g.subset({"2"})) && oracle::is_dense(t.opens(), g.subset({"1", "3"})),
              "{2} and {1,3} dense");
    return o;
}

Outcome example_4_5()
{
    Outcome o;
    const GroundSet g = GroundSet::numbered(3);
    const GenTopology t(g, family(g, {{}, {"1", "2", "3"}, {"1", "2"}}));
    o.require(try_cap_I(dense_family(t)) == Subset{}, "I(D) = {}");
    o.require(try_cap_I(dense_open_family(t)) == g.subset({"1", "2"}), "I(DO) = {1,2}");
    o.require(isolated_points(t).empty(), "Iso = {}");
    o.require(oracle::cap_I(oracle::dense_sets(t.opens(), 3)) == Subset{}, "I(D) oracle");
    o.require(is_resolvable(t) && !is_indiscrete(t), "non-indiscrete resolvable");
    o.require(check("P4.4", t).verdict == Verdict::holds, "P4.4 holds");
    return o;
}

Outcome example_3_12()
{
    Outcome o;
    for (std::size_t n = 2; n <= 4; ++n) {
        const GroundSet g = pointed_ground(n);
        const Subset x0 = g.subset({"x0"});
        const SetFamily a{x0};
        const std::string at = " (n=" + std::to_string(n) + ")";
        o.require(!classify(mu_of_family(a, g)).topology, "mu[A] not a topology" + at);
        o.require(specialization_topology(quasiorder_from_family(a, g)) == SetFamily{Subset{}, g.whole(), x0},
                  "tau[<=A]" + at);
        o.require(mu_tilde_of_family(a, g) == superset_topology(x0, g), "mu~[A] = super({x0})" + at);
        o.require(check("T3.10", FamilyInstance{g, a}).verdict == Verdict::holds, "T3.10 holds" + at);
        o.require(check("C3.11-converse", FamilyInstance{g, a}).verdict == Verdict::violated,
                  "converse probe fires" + at);
    }
    return o;
}

Outcome remarks_4_1_4_2()
{
    Outcome o;
    for (std::size_t n = 1; n <= 4; ++n) {
        const GroundSet g = GroundSet::numbered(n);
        const std::string at = " (n=" + std::to_string(n) + ")";
        const SetFamily all = SetFamily::powerset(n);

        const GenTopology empty_only(g, SetFamily{Subset{}});
        const SetFamily d = dense_family(empty_only);
        o.require(d == all && nowhere_dense_family(empty_only) == all, "mu={{}}: D = ND = P(X)" + at);
        o.require(specialization_topology(quasiorder_from_family(d, g)) == all, "mu={{}}: tau[<=D] discrete" + at);
        const SetFamily mt_do = mu_tilde_of_family(dense_open_family(empty_only), g).opens();
        o.require(specialization_topology(quasiorder_from_family(mt_do, g)) == SetFamily{Subset{}, g.whole()},
                  "mu={{}}: tau[<=mu~[DO]] indiscrete" + at);
        bool threw = false;
        try {
            cap_I(dense_open_family(empty_only));
        } catch (const UndefinedIntersection&) {
            threw = true;
        }
        o.require(threw, "mu={{}}: I(DO) undefined" + at);

        if (n >= 2) {
            const GenTopology ind = indiscrete_topology(g);
            o.require(dense_family(ind) == all.without(Subset{}), "mu={{},X}: D = P(X) - {{}}" + at);
            const auto r = resolution(ind);
            o.require(r && valid_resolution(ind, *r), "mu={{},X}: resolvable" + at);
            o.require(try_cap_I(dense_family(ind)) == Subset{}, "mu={{},X}: I(D) = {}" + at);
            o.require(try_cap_I(dense_open_family(ind)) == g.whole(), "mu={{},X}: I(DO) = X" + at);
        }
    }
    return o;
}

Outcome family_sweep()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const std::size_t expected[] = {2, 14, 254, 65534};
    for (const char* id : {"P3.3", "P3.4", "T3.6", "T3.7", "C3.8", "T3.9", "T3.10", "C3.11", "T3.13"}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const CheckSummary s = check_all(id, InstanceStream::exhaustive(InstanceKind::family, n));
            const std::string at = std::string(id) + " n=" + std::to_string(n);
            o.require(s.instances == expected[n - 1], at + ": instance count " + std::to_string(s.instances));
            o.require(s.violation_count == 0, at + ": " + std::to_string(s.violation_count) + " violations");
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < sweep_budget_seconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome gentopology_sweep()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (const char* id :
         {"P2.6", "P2.7", "P4.4", "T4.7", "T4.8", "T4.9", "C4.12", "P5.3", "P5.4", "C5.5", "C5.6"}) {
        std::vector<InstanceStream> streams;
        for (std::size_t n = 1; n <= 3; ++n) {
            streams.push_back(InstanceStream::exhaustive(InstanceKind::space, n));
        }
        streams.push_back(InstanceStream::random(InstanceKind::space, 4, 1, 10000));
        streams.push_back(InstanceStream::random(InstanceKind::space, 5, 1, 10000));
        for (const InstanceStream& st : streams) {
            const CheckSummary s = check_all(id, st);
            o.require(s.violation_count == 0, std::string(id) + " " + st.describe() + ": violations");
            if (st.mode == StreamMode::random) {
                o.require(s.instances >= 10000, std::string(id) + " " + st.describe() + ": too few samples");
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < sweep_budget_seconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome necessity_probes()
{
    Outcome o;
    for (const char* id : {"T3.10-nohyp", "T4.8-nohyp", "P5.4-nohyp"}) {
        const SearchResult r = search_counterexample(id, 2);
        o.require(r.counterexample.has_value(), std::string(id) + ": no counterexample at n <= 2");
    }
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& r : oracle::all_quasiorders(n)) {
            o.require(specialization_topology(Quasiorder::from_rows(r)) == oracle::increasing_sets(r),
                      "tau mismatch at n=" + std::to_string(n));
        }
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const Quasiorder q = detail::random_quasiorder(4, rng);
        o.require(oracle::is_quasiorder(q.rows()), "sample is not a quasiorder");
        o.require(specialization_topology(q) == oracle::increasing_sets(q.rows()), "tau mismatch at n=4");
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        const CheckSummary s = check_all("L3.5", InstanceStream::exhaustive(InstanceKind::quasiorder_pair, n));
        const std::size_t q = oracle::all_quasiorders(n).size();
        o.require(s.instances == q * q, "L3.5 pair count at n=" + std::to_string(n));
        o.require(s.violation_count == 0, "L3.5 violated at n=" + std::to_string(n));
    }
    return o;
}

Outcome zigzag()
{
    Outcome o;
    const GroundSet g = GroundSet::numbered(5, 0);
    const std::vector<std::pair<std::size_t, std::size_t>> pairs{{1, 0}, {1, 2}, {3, 2}, {3, 4}};
    const Quasiorder q = Quasiorder::closure_of(5, pairs);
    const GenTopology t(g, specialization_topology(q));
    const Subset m = g.subset({"0", "2", "4"});
    o.require(maximal_elements(q) == m && oracle::maximal(q.rows()) == m, "M = {0,2,4}");
    o.require(isolated_points(t) == m, "M = Iso");
    o.require(is_iso_dense(t), "iso-dense");
    o.require(dense_family(t).with(Subset{}) == superset_topology(m, g).opens(), "D + {} = super(M)");
    o.require(check("P2.13", OrderInstance{g, q}).verdict == Verdict::holds, "P2.13 holds");
    return o;
}

Outcome cofinite()
{
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n) {
        const GroundSet g = GroundSet::numbered(n);
        const GenTopology t = cofinite_topology(g);
        const std::string at = " (n=" + std::to_string(n) + ")";
        o.require(t == discrete_topology(g) && is_discrete(t), "discrete" + at);
        o.require(!is_resolvable(t), "irresolvable" + at);
        o.require(f_d(t), "F_d" + at);
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    std::vector<std::size_t> expected_fail;
    app.add_option("--expect-fail", expected_fail, "criterion numbers known to fail");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"Example 3.1: mu, mu~, up-sets, specialization topologies, all irresolvable", example_3_1},
        {"Example 2.5: DO + {} = mu, not a topology, resolvable", example_2_5},
        {"Example 4.5: I(D) = {}, I(DO) = {1,2}, Iso = {}", example_4_5},
        {"Example 3.12 for |X| = 2,3,4", example_3_12},
        {"indiscrete spaces mu = {{}} and mu = {{}, X}", remarks_4_1_4_2},
        {"family sweep n <= 4, nine statements, zero violations, < 60 s", family_sweep},
        {"gentopology sweep n <= 3 plus 10^4 random at n = 4, 5, < 60 s", gentopology_sweep},
        {"hypothesis-necessity probes find counterexamples at n <= 2", necessity_probes},
        {"specialization topology equals increasing-set oracle; L3.5 on all pairs n <= 3", oracle_equivalence},
        {"finite zigzag order: M = Iso, iso-dense, D + {} = super(M)", zigzag},
        {"cofinite topology on n <= 8 is discrete, irresolvable, F_d", cofinite},
    };

    std::set<std::size_t> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%zu] %s (%.0f ms)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, ms,
                    o.pass ? "" : ": ", o.note.c_str());
        if (!o.pass) {
            failed.insert(i + 1);
        }
    }
    const std::set<std::size_t> expected(expected_fail.begin(), expected_fail.end());
    std::printf("%zu of %zu criteria pass", criteria.size() - failed.size(), criteria.size());
    if (!expected.empty()) {
        std::printf("; expected failures:");
        for (std::size_t k : expected) {
            std::printf(" %zu%s", k, failed.count(k) ? "" : " (now passes)");
        }
    }
    std::printf("\n");
    return failed == expected ? 0 : 1;
}
