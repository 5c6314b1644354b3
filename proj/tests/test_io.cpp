#include <quasitop/quasitop.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

using namespace quasitop;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(QUASITOP_FIXTURES) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SpaceDocument load(const std::string& name) { return parse_document_text(fixture(name)); }

std::string error_of(const std::string& text)
{
    try {
        parse_document_text(text);
    } catch (const DocumentError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Documents, FamilyFixture)
{
    const SpaceDocument d = load("example_3_1.json");
    EXPECT_EQ(d.kind, DocumentKind::family);
    EXPECT_EQ(d.ground.size(), 4u);
    EXPECT_EQ(d.family, (SetFamily{d.ground.subset({"1", "2"}), d.ground.subset({"2", "3", "4"})}));
    ASSERT_TRUE(d.name.has_value());
}

TEST(Documents, QuasiorderPairsAreClosed)
{
    const SpaceDocument d = load("zigzag.json");
    ASSERT_EQ(d.kind, DocumentKind::quasiorder);
    EXPECT_EQ(d.closure_added, 0u);
    const SpaceDocument chain = parse_document_text(
        R"({"ground": ["a", "b", "c"], "quasiorder": {"pairs": [["a", "b"], ["b", "c"]]}})");
    EXPECT_EQ(chain.closure_added, 1u);
    EXPECT_TRUE(chain.order->leq(0, 2));
}

TEST(Documents, QuasiorderRows)
{
    const SpaceDocument d = parse_document_text(R"({"ground": ["a", "b"], "quasiorder": {"n": 2, "rows": [3, 2]}})");
    EXPECT_TRUE(d.order->leq(0, 1));
    EXPECT_FALSE(d.order->leq(1, 0));
    EXPECT_NE(error_of(R"({"ground": ["a", "b"], "quasiorder": {"rows": [2, 2]}})").find("/quasiorder/rows"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"ground": ["a", "b"], "quasiorder": {"n": 3, "rows": [3, 2]}})").find("/quasiorder/n"),
              std::string::npos);
}

TEST(Documents, ErrorsCarryPositions)
{
    EXPECT_NE(error_of(fixture("malformed.json")).find("syntax error at byte"), std::string::npos);
    EXPECT_NE(error_of(fixture("unknown_label.json")).find("is not in the ground set"), std::string::npos);
    EXPECT_NE(error_of(fixture("not_gentopology.json")).find("/open_sets: not a generalized topology"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"ground": ["a", "a"], "family": []})").find("duplicate"), std::string::npos);
    EXPECT_NE(error_of(R"({"ground": ["a"]})").find("exactly one of"), std::string::npos);
    EXPECT_NE(error_of(R"({"ground": ["a"], "family": [], "open_sets": [[]]})").find("exactly one of"),
              std::string::npos);
    EXPECT_NE(error_of(R"([1, 2])").find("expected a JSON object"), std::string::npos);
    EXPECT_NE(error_of(R"({"ground": ["a"], "family": [[1]]})").find("/family/0/0"), std::string::npos);
}

TEST(Documents, EmptyGround)
{
    const SpaceDocument d = load("empty_ground.json");
    EXPECT_TRUE(d.ground.empty());
    EXPECT_NO_THROW(analyze(d));
}

TEST(Serialization, RoundTripsRandomFamilies)
{
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = rng() % 7;
        SpaceDocument d;
        d.ground = GroundSet::numbered(n);
        std::vector<Subset> m;
        for (std::size_t k = rng() % 8; k > 0; --k) {
            m.emplace_back(rng() & low_bits(n));
        }
        d.family = SetFamily(m);
        const json j = document_to_json(d);
        const SpaceDocument back = parse_document(j);
        ASSERT_EQ(back.family, d.family);
        ASSERT_EQ(back.ground, d.ground);
        ASSERT_EQ(document_to_json(back).dump(), j.dump());
    }
}

TEST(Serialization, QuasiorderRoundTrip)
{
    const SpaceDocument d = load("zigzag.json");
    const SpaceDocument back = parse_document(document_to_json(d));
    EXPECT_EQ(*back.order, *d.order);
}

TEST(Analyze, Example25)
{
    const json r = analyze(load("example_2_5.json"));
    EXPECT_EQ(r["DO"], json::parse(R"([["1","2"],["2","3"],["1","2","3"]])"));
    EXPECT_EQ(r["classification"]["topology"], false);
    EXPECT_EQ(r["profile"]["resolvable"], true);
    EXPECT_EQ(r["profile"]["resolvable_witness"], json::parse(R"([["2"],["1","3"]])"));
    const std::string text = render_analysis(r);
    EXPECT_NE(text.find("resolvable: true, witness {2}/{1,3}"), std::string::npos);
}

TEST(Analyze, Example45)
{
    const json r = analyze(load("example_4_5.json"));
    EXPECT_EQ(r["I(D)"], json::array());
    EXPECT_EQ(r["I(DO)"], json::parse(R"(["1","2"])"));
    EXPECT_EQ(r["Iso"], json::array());
    const std::string text = render_analysis(r);
    EXPECT_NE(text.find("I(D) = {}"), std::string::npos);
    EXPECT_NE(text.find("I(DO) = {1,2}"), std::string::npos);
}

TEST(Analyze, UndefinedIntersection)
{
    const json r = analyze(load("remark_4_1.json"));
    EXPECT_EQ(r["I(DO)"], "undefined");
    EXPECT_EQ(r["DO"], json::parse("[[]]"));
}

TEST(Analyze, FamilyDocument)
{
    const json r = analyze(load("example_3_1.json"));
    EXPECT_EQ(r["I(A)"], json::parse(R"(["2"])"));
    EXPECT_EQ(r["tau[<=A]"], json::parse(R"([[],["2"],["1","2"],["2","3","4"],["1","2","3","4"]])"));
    EXPECT_EQ(r["up[<=mu_tilde[A]]"][2], json::parse(R"(["3",["2","3"]])"));
}

TEST(Analyze, IsIdempotentOnEveryFixture)
{
    for (const char* name : {"example_2_5.json", "example_3_1.json", "example_3_12.json", "example_4_5.json",
                             "remark_4_1.json", "remark_4_2.json", "zigzag.json", "empty_ground.json"}) {
        const json first = analyze(load(name));
        const json second = analyze(parse_document(first));
        EXPECT_EQ(first, second) << name;
    }
}

TEST(Reports, JsonShape)
{
    const SpaceDocument d = load("example_3_12.json");
    const ConditionReport r = check("C3.11-converse", FamilyInstance{d.ground, d.family});
    const json j = report_to_json(r);
    EXPECT_EQ(j["statement"], "C3.11-converse");
    EXPECT_EQ(j["verdict"], "violated");
    EXPECT_TRUE(j["hypothesis_met"].get<bool>());
    ASSERT_TRUE(j["conditions"].is_array());
    ASSERT_TRUE(j["clauses"].is_array());
    for (const auto& c : j["conditions"]) {
        EXPECT_TRUE(c.contains("label") && c.contains("text") && c.contains("value"));
    }
    const std::string text = render_report(r);
    EXPECT_NE(text.find("verdict: violated"), std::string::npos);
    EXPECT_NE(text.find("confirms the non-implication"), std::string::npos);
}

TEST(Reports, SummaryAndSearchJson)
{
    const CheckSummary s = check_all("C3.8", InstanceStream::exhaustive(InstanceKind::family, 2));
    const json js = summary_to_json(s);
    EXPECT_EQ(js["instances"], 14);
    EXPECT_EQ(js["violation_count"], 0);

    const SearchResult r = search_counterexample("T3.10-nohyp", 2);
    const json jr = search_to_json("T3.10-nohyp", r);
    EXPECT_FALSE(jr["counterexample"].is_null());
    EXPECT_NE(render_search(r).find("counterexample found after"), std::string::npos);
}
