#include "oracles.hpp"

#include <quasitop/props.hpp>
#include <quasitop/theorems.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace quasitop;

namespace {

GenTopology space(const GroundSet& g, SetFamily opens) { return GenTopology(g, std::move(opens)); }

bool valid_resolution(const GenTopology& t, const SubsetPair& p)
{
    return !p.first.meets(p.second) && (p.first | p.second) == t.whole() && oracle::is_dense(t.opens(), p.first)
           && oracle::is_dense(t.opens(), p.second);
}

} // namespace

TEST(Separation, SupersetTopologyOnTwoPoints)
{
    const GroundSet g = GroundSet::numbered(2);
    const GenTopology t = superset_topology(g.subset({"1"}), g);
    EXPECT_TRUE(is_T0(t));
    EXPECT_FALSE(is_T1(t));
    EXPECT_EQ(t1_violation(t), 0u);
}

TEST(Separation, DiscreteAndIndiscrete)
{
    const GroundSet g = GroundSet::numbered(3);
    EXPECT_TRUE(is_T0(discrete_topology(g)));
    EXPECT_TRUE(is_T1(discrete_topology(g)));
    EXPECT_FALSE(is_T0(indiscrete_topology(g)));
    EXPECT_FALSE(is_T1(indiscrete_topology(g)));
    EXPECT_EQ(t0_violation(indiscrete_topology(g)), std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Triviality, Examples)
{
    const GroundSet g = GroundSet::numbered(3);
    EXPECT_TRUE(is_indiscrete(space(g, SetFamily{Subset{}})));
    EXPECT_TRUE(is_indiscrete(indiscrete_topology(g)));
    const GenTopology t = space(g, SetFamily{Subset{}, g.whole(), g.subset({"1", "2"})});
    EXPECT_FALSE(is_indiscrete(t));
    EXPECT_FALSE(is_discrete(t));
}

TEST(IsoDensity, Examples)
{
    const GroundSet g2 = GroundSet::numbered(2);
    const GenTopology empty_only = space(g2, SetFamily{Subset{}});
    EXPECT_TRUE(is_iso_dense(empty_only));
    EXPECT_TRUE(is_dense_in_itself(empty_only));

    const GroundSet g3 = GroundSet::numbered(3);
    EXPECT_TRUE(is_iso_dense(superset_topology(g3.subset({"1"}), g3)));

    const GenTopology ex25 = space(g3, SetFamily{Subset{}, g3.whole(), g3.subset({"1", "2"}), g3.subset({"2", "3"})});
    EXPECT_FALSE(is_iso_dense(ex25));
    EXPECT_TRUE(is_dense_in_itself(ex25));
}

TEST(Resolvability, Examples)
{
    const GroundSet g = GroundSet::numbered(3);
    const GenTopology ex25 = space(g, SetFamily{Subset{}, g.whole(), g.subset({"1", "2"}), g.subset({"2", "3"})});
    const auto r = resolution(ex25);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(valid_resolution(ex25, *r));
    EXPECT_EQ(r->first, g.subset({"2"}));
    EXPECT_EQ(r->second, g.subset({"1", "3"}));

    const GenTopology ex45 = space(g, SetFamily{Subset{}, g.whole(), g.subset({"1", "2"})});
    ASSERT_TRUE(is_resolvable(ex45));
    EXPECT_TRUE(valid_resolution(ex45, *resolution(ex45)));

    EXPECT_FALSE(is_resolvable(discrete_topology(g)));
    EXPECT_FALSE(is_resolvable(indiscrete_topology(GroundSet::numbered(1))));
    EXPECT_TRUE(is_resolvable(indiscrete_topology(GroundSet::numbered(2))));
}

TEST(Resolvability, CapIsEnforced)
{
    Limits lim;
    lim.resolvability_cap = 3;
    EXPECT_THROW(resolution(indiscrete_topology(GroundSet::numbered(4)), lim), CapExceeded);
}

TEST(DenseIntersections, Examples)
{
    const GroundSet g2 = GroundSet::numbered(2);
    const GenTopology ind = indiscrete_topology(g2);
    EXPECT_TRUE(f_d_T(ind));
    EXPECT_FALSE(f_d(ind));

    const GroundSet g3 = GroundSet::numbered(3);
    const GenTopology sup = superset_topology(g3.subset({"1"}), g3);
    EXPECT_TRUE(f_d(sup));
    EXPECT_TRUE(f_d_T(sup));

    const GenTopology ex25 = space(g3, SetFamily{Subset{}, g3.whole(), g3.subset({"1", "2"}), g3.subset({"2", "3"})});
    EXPECT_FALSE(f_d(ex25));
    EXPECT_FALSE(f_d_T(ex25));
    const auto w = f_d_T_violation(ex25);
    ASSERT_TRUE(w.has_value());
    const Subset c = w->first & w->second;
    EXPECT_FALSE(c.empty());
    EXPECT_FALSE(oracle::is_dense(ex25.opens(), c));
}

TEST(DenseIntersections, SampledViolationIsAuthoritative)
{
    const GroundSet g3 = GroundSet::numbered(3);
    const GenTopology ex25 = space(g3, SetFamily{Subset{}, g3.whole(), g3.subset({"1", "2"}), g3.subset({"2", "3"})});
    const SampledVerdict v = f_d_sampled(ex25, 5, 200, true);
    EXPECT_FALSE(v.value);
    EXPECT_TRUE(v.authoritative);
    const SampledVerdict ok = f_d_sampled(discrete_topology(g3), 5, 200, false);
    EXPECT_TRUE(ok.value);
    EXPECT_FALSE(ok.authoritative);
}

TEST(Profile, AgreesWithOraclesOnAllGentopologiesUpToFourPoints)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const GroundSet g = GroundSet::numbered(n);
        for (const SetFamily& opens : oracle::all_gentopologies(n)) {
            const GenTopology t(g, opens);
            const SpaceProfile p = profile(t);
            const Subset iso = oracle::isolated(opens, n);
            ASSERT_EQ(p.t0, oracle::is_T0(opens, n));
            ASSERT_EQ(p.t1, oracle::is_T1(opens, n));
            ASSERT_EQ(p.discrete, iso == g.whole());
            ASSERT_EQ(p.dense_in_itself, iso.empty());
            ASSERT_EQ(p.iso_dense, oracle::is_dense(opens, iso));
            ASSERT_EQ(p.resolvable, oracle::is_resolvable(opens, n));
            ASSERT_EQ(p.fd, oracle::f_d(opens, n, false));
            ASSERT_EQ(p.fd_t, oracle::f_d(opens, n, true));

            // Witnesses justify the verdicts they accompany.
            ASSERT_EQ(p.t0, !p.t0_witness.has_value());
            ASSERT_EQ(p.t1, !p.t1_witness.has_value());
            ASSERT_EQ(p.resolvable, p.resolvable_witness.has_value());
            if (p.resolvable_witness) {
                ASSERT_TRUE(valid_resolution(t, *p.resolvable_witness));
            }
            if (p.t1_witness) {
                ASSERT_FALSE(oracle::member(opens, g.whole() - Subset::singleton(*p.t1_witness)));
            }
            if (p.iso_dense_witness) {
                ASSERT_FALSE(p.iso_dense_witness->meets(iso));
                ASSERT_TRUE(oracle::member(opens, *p.iso_dense_witness));
            }
            if (p.fd_witness) {
                ASSERT_FALSE(oracle::is_dense(opens, p.fd_witness->first & p.fd_witness->second));
            }
        }
    }
}

TEST(Profile, EmptyCarrier)
{
    const GenTopology t(GroundSet{}, SetFamily{Subset{}});
    const SpaceProfile p = profile(t);
    EXPECT_TRUE(p.t0 && p.t1 && p.indiscrete && p.discrete && p.iso_dense && p.dense_in_itself);
    EXPECT_TRUE(p.resolvable);
    EXPECT_TRUE(p.fd && p.fd_t);
}

TEST(CofiniteTopology, FiniteCarriersAreDiscrete)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        const GenTopology t = cofinite_topology(GroundSet::numbered(n));
        EXPECT_TRUE(is_discrete(t));
        EXPECT_FALSE(is_resolvable(t));
        EXPECT_TRUE(f_d(t));
    }
}
