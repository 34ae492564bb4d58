#include <gtest/gtest.h>

#include "vecpack/errors.hpp"
#include "vecpack/fixtures.hpp"
#include "vecpack/reduce.hpp"
#include "vecpack/serialize.hpp"

namespace vecpack {
namespace {

std::string schema_error_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const SchemaError& e) {
        return e.what();
    }
    return "";
}

TEST(Serialize, ParsesMinimalInstance) {
    const auto inst = parse_as<PackingInstance>(R"({"kind":"VBP","dim":1,"jobs":[["1/2"]]})");
    EXPECT_EQ(inst.kind(), ProblemKind::VBP);
    ASSERT_EQ(inst.size(), 1u);
    EXPECT_EQ(inst.job(0).coords[0], Rational(1, 2));
}

TEST(Serialize, CoordinateAboveOneIsReportedWithPath) {
    const auto msg = schema_error_of(R"({"kind":"VS","dim":1,"jobs":[["3/2"]]})");
    EXPECT_NE(msg.find("jobs[0][0]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("coordinate > 1"), std::string::npos) << msg;
}

TEST(Serialize, RejectsSchemaViolations) {
    EXPECT_NE(schema_error_of(R"({"kind":"VBP","dim":1,"jobs":[["2/4"]]})"), "");
    EXPECT_NE(schema_error_of(R"({"kind":"VBP","dim":1,"jobs":[[0.5]]})"), "");
    EXPECT_NE(schema_error_of(R"({"kind":"VBP","dim":1,"jobs":[["1"]],"extra":1})"), "");
    EXPECT_NE(schema_error_of(R"({"kind":"XX","dim":1,"jobs":[["1"]]})"), "");
    EXPECT_NE(schema_error_of(R"({"type":"graph","n":2,"edges":[[0,0]]})"), "");
    EXPECT_NE(schema_error_of(R"({"type":"graph","n":2,"edges":[[0,5]]})"), "");
    EXPECT_NE(schema_error_of(R"({"universe":2,"sets":[[0,1],[1,0]]})"), "");
    EXPECT_NE(schema_error_of("not json"), "");
    EXPECT_NE(schema_error_of(R"([1,2])"), "");
    EXPECT_NE(schema_error_of(R"({"n":2,"edges":[[0,1]]})"), "");  // graph or hypergraph: ambiguous
}

TEST(Serialize, CanonicalTextIsStable) {
    const auto text = serialize(Document{SetSystem(4, {{2, 3}, {0, 1}})});
    EXPECT_EQ(text, serialize(parse_document(text)));
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find("\"type\": \"set_system\""), std::string::npos);
    // members come out sorted
    EXPECT_LT(text.find("\"sets\""), text.find("\"universe\""));
}

template <class T>
void expect_round_trip(const T& x) {
    const auto text = serialize(Document{x});
    const auto back = parse_document(text);
    ASSERT_TRUE(std::holds_alternative<T>(back)) << text;
    EXPECT_EQ(std::get<T>(back), x);
    EXPECT_EQ(serialize(back), text);
}

TEST(Serialize, RoundTripsEveryDocumentKind) {
    fixtures::Rng rng(3);
    expect_round_trip(fixtures::random_instance(rng, ProblemKind::VBP, 5, 3, 4));
    expect_round_trip(fixtures::random_instance(rng, ProblemKind::VS, 5, 2, 3, 3));
    expect_round_trip(fixtures::random_instance(rng, ProblemKind::VBC, 4, 1, 2));
    expect_round_trip(fixtures::random_simple_family(rng, 3, 2, 9));
    expect_round_trip(fixtures::cycle_graph(5));
    expect_round_trip(fixtures::empty_graph(3));
    expect_round_trip(fixtures::fano_plane());
    expect_round_trip(fixtures::conflicting_star_label_cover());
    expect_round_trip(threesat_to_labelcover(fixtures::single_clause()));
    expect_round_trip(full_embedding(SetSystem(4, {{0, 1}, {2, 3}})).embedding);
    expect_round_trip(fixtures::random_truth_table(rng, 3, 2));
    expect_round_trip(fixtures::random_3cnf(rng, 5, 6));
    expect_round_trip(ColoringDoc{3, {0, 1, 2, 0}});
    expect_round_trip(Assignment{{0, 1, 1}, 2});
    const auto s = SetSystem(4, {{0, 1}, {2, 3}});
    expect_round_trip(certify_setcover_to_vbp(s, setcover_to_vbp(s)));
}

TEST(Serialize, ReductionResultRoundTrips) {
    const auto g = fixtures::complete_graph(3);
    const auto r = monoclique_to_vs(g, 2, 2);
    const ReductionResult result{r.instance, certify_monoclique_to_vs(g, 2, 2, r)};
    const auto text = serialize(result);
    EXPECT_EQ(parse_reduction_result(text), result);
    EXPECT_EQ(serialize(parse_reduction_result(text)), text);
}

TEST(Serialize, ParseAsRejectsOtherKinds) {
    const auto text = serialize(Document{fixtures::cycle_graph(4)});
    EXPECT_THROW(parse_as<Hypergraph>(text), SchemaError);
    EXPECT_NO_THROW(parse_as<Graph>(text));
}

TEST(Serialize, CnfLiteralsAreSignedOneBased) {
    const auto f = parse_as<Cnf>(R"({"variables":3,"clauses":[[1,-2,3]]})");
    ASSERT_EQ(f.clauses.size(), 1u);
    EXPECT_EQ(f.clauses[0][0].var, 0);
    EXPECT_FALSE(f.clauses[0][0].negated);
    EXPECT_EQ(f.clauses[0][1].var, 1);
    EXPECT_TRUE(f.clauses[0][1].negated);
    EXPECT_NE(schema_error_of(R"({"variables":3,"clauses":[[0,1,2]]})"), "");
}

}  // namespace
}  // namespace vecpack
