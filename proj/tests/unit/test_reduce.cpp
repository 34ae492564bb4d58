#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vecpack/errors.hpp"
#include "vecpack/fixtures.hpp"
#include "vecpack/reduce.hpp"
#include "vecpack/solve.hpp"

namespace vecpack {
namespace {

using namespace fixtures;

TEST(SetCoverToVbp, JobsAreEmbeddingRows) {
    const SetSystem s(4, {{0, 1}, {2, 3}});
    const auto r = setcover_to_vbp(s);
    EXPECT_EQ(r.instance.kind(), ProblemKind::VBP);
    EXPECT_EQ(r.instance.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.instance.job(i).coords, r.embedding.embedding[static_cast<int>(i)]);
    const auto cert = certify_setcover_to_vbp(s, r);
    EXPECT_EQ(cert.completeness, (GapCertificate::Completeness{true, Rational(2)}));
    EXPECT_EQ(cert.soundness, (GapCertificate::Soundness{true, Rational(2)}));
}

TEST(MonoCliqueToVs, TriangleTwoMachines) {
    const auto r = monoclique_to_vs(complete_graph(3), 2, 2);
    EXPECT_EQ(r.instance.dim(), 3u);
    EXPECT_EQ(r.instance.machines(), 2);
    EXPECT_FALSE(r.degenerate);
    EXPECT_EQ(solve::vs(r.instance, solve::VsMode::Exact).optimum.radicand, Rational(2));
    const auto cert = certify_monoclique_to_vs(complete_graph(3), 2, 2, r);
    EXPECT_FALSE(cert.completeness.witness_present);
    EXPECT_EQ(cert.soundness.bound_value, Rational(2));
}

TEST(MonoCliqueToVs, PathIsColorable) {
    const auto g = path_graph(3);
    const auto r = monoclique_to_vs(g, 2, 2);
    EXPECT_EQ(r.cliques, (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
    const auto cert = certify_monoclique_to_vs(g, 2, 2, r);
    EXPECT_EQ(cert.completeness, (GapCertificate::Completeness{true, Rational(1)}));
    EXPECT_EQ(cert.soundness, (GapCertificate::Soundness{true, Rational(1)}));
}

TEST(MonoCliqueToVs, EdgelessIsDegenerate) {
    const auto r = monoclique_to_vs(empty_graph(3), 2, 2);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.instance.dim(), 1u);
    for (const auto& j : r.instance.jobs()) EXPECT_EQ(j.coords[0], Rational(0));
    EXPECT_THROW(monoclique_to_vs(empty_graph(3), 2, 1), std::invalid_argument);
    EXPECT_THROW(monoclique_to_vs(empty_graph(3), 0, 2), std::invalid_argument);
}

TEST(MonoCliqueToVs, MakespanEqualsMonoCliqueBound) {
    // a machine load of B on some coordinate is exactly a monochromatic B-clique
    Rng rng(40);
    for (int t = 0; t < 40; ++t) {
        const auto g = random_graph(rng, 6, 1, 2);
        const auto r = monoclique_to_vs(g, 2, 3);
        const auto ms = solve::vs(r.instance, solve::VsMode::Exact).optimum.radicand;
        const bool avoid = oracle::minimax_mono_clique(g, 2) < 3;
        if (!r.degenerate) ASSERT_EQ(ms < Rational(3), avoid);
    }
}

TEST(LexAmplify, Basics) {
    EXPECT_EQ(lex_amplify(complete_graph(2), 2), complete_graph(4));
    EXPECT_THROW(lex_amplify(complete_graph(2), 3), std::invalid_argument);
    SearchCaps caps;
    caps.product_vertices = 20;
    EXPECT_THROW(lex_amplify(complete_graph(5), 2, caps), CapExceeded);
    const auto g = cycle_graph(5);
    const auto cert = certify_lex_amplify(g, 2, 2, lex_amplify(g, 2));
    EXPECT_TRUE(cert.completeness.witness_present);
    EXPECT_EQ(cert.parameters.at("chi"), "3");
}

TEST(BhcToVs, Examples) {
    const Hypergraph h(4, {{0, 1, 2, 3}});
    const auto r = bhc_to_vs(h, 2);
    EXPECT_EQ(r.instance.dim(), 1u);
    EXPECT_EQ(r.instance.machines(), 2);
    const auto cert = certify_bhc_to_vs(h, 2, r);
    EXPECT_EQ(cert.parameters.at("balance"), "2");
    EXPECT_EQ(cert.completeness, (GapCertificate::Completeness{true, Rational(2)}));
    EXPECT_EQ(cert.soundness.bound_value, Rational(2));

    const auto fano = fano_plane();
    const auto fc = certify_bhc_to_vs(fano, 2, bhc_to_vs(fano, 2));
    EXPECT_EQ(fc.parameters.at("properly_colorable"), "false");
    EXPECT_GE(fc.soundness.bound_value, Rational(3));
    EXPECT_TRUE(bhc_to_vs(Hypergraph(2, {}), 2).degenerate);
}

TEST(LabelCoverToBhc, StarWithOneLabel) {
    const auto lc = star_label_cover(3);
    const auto r = labelcover_to_bhc(lc, 3);
    EXPECT_EQ(r.cloud_size, 3);
    EXPECT_EQ(r.hypergraph.n(), 9);
    ASSERT_EQ(r.hypergraph.size(), 1u);
    EXPECT_EQ(r.hypergraph.edges()[0].size(), 9u);
    const auto cert = certify_labelcover_to_bhc(lc, r);
    EXPECT_TRUE(cert.completeness.witness_present);
    EXPECT_LE(cert.completeness.achieved_value, Rational(6));
    EXPECT_EQ(cert.soundness.bound_value, Rational(1));
}

TEST(LabelCoverToBhc, Preconditions) {
    EXPECT_THROW(labelcover_to_bhc(star_label_cover(3), 4), std::invalid_argument);
    EXPECT_THROW(labelcover_to_bhc(star_label_cover(3), 2), std::invalid_argument);
    EXPECT_TRUE(is_odd_prime(3));
    EXPECT_TRUE(is_odd_prime(7));
    EXPECT_FALSE(is_odd_prime(9));
    EXPECT_FALSE(is_odd_prime(2));
}

TEST(LabelCoverToBhc, EdgesObeyTheConstraint) {
    const auto lc = satisfiable_star_label_cover();
    const auto r = labelcover_to_bhc(lc, 3);
    EXPECT_GT(r.hypergraph.size(), 0u);
    EXPECT_EQ(r.hypergraph.uniformity(), 9);
    Rng rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, r.hypergraph.size() - 1);
    for (int t = 0; t < 200; ++t) {
        ASSERT_TRUE(oracle::lc_constraint_holds(lc, 3, r.cloud_size, r.hypergraph.edges()[pick(rng)]));
    }
}

TEST(LabelCoverToRainbow, IdentityFoldsCloudsTogether) {
    const auto lc = identity_label_cover(2);
    const auto r = labelcover_to_rainbow(lc, 3);
    EXPECT_EQ(r.cloud_size, 9);
    EXPECT_EQ(r.hypergraph.n(), 9);
    for (int x = 0; x < 9; ++x) EXPECT_EQ(r.master_of[x], r.master_of[9 + x]);
    const auto cert = certify_labelcover_to_rainbow(lc, r);
    EXPECT_EQ(cert.completeness, (GapCertificate::Completeness{true, Rational(3)}));
    EXPECT_EQ(cert.soundness.bound_value, Rational(1));
}

TEST(LabelCoverToRainbow, ConflictIsNotTwoColorable) {
    const auto lc = conflict_label_cover();
    const auto cert = certify_labelcover_to_rainbow(lc, labelcover_to_rainbow(lc, 3));
    EXPECT_FALSE(cert.completeness.witness_present);
    EXPECT_EQ(cert.soundness, (GapCertificate::Soundness{true, Rational(0)}));
}

TEST(LabelCoverToRainbow, Preconditions) {
    EXPECT_THROW(labelcover_to_rainbow(identity_label_cover(2), 2), std::invalid_argument);
    const LabelCover uneven(1, 1, 3, 2, {LcEdge{0, 0, {0, 1, 1}}});
    EXPECT_THROW(labelcover_to_rainbow(uneven, 3), std::invalid_argument);
}

TEST(LabelCoverToRainbow, FoldingFollowsProjection) {
    Rng rng(100);
    std::uniform_int_distribution<int> label(0, 1), digit(0, 2);
    const Cube cube(3, 2, 100);
    for (int t = 0; t < 100; ++t) {
        const std::vector<Label> pi{label(rng), label(rng)};
        const LabelCover lc(1, 1, 2, 2, {LcEdge{0, 0, pi}});
        const auto r = labelcover_to_rainbow(lc, 3);
        const std::vector<int> y{digit(rng), digit(rng)};
        const std::vector<int> x{y[pi[0]], y[pi[1]]};
        ASSERT_EQ(r.master_of[cube.encode(x)], r.master_of[r.cloud_size + cube.encode(y)]);
    }
}

TEST(LabelCoverToRainbow, ExactlyRuleIsNarrower) {
    const auto lc = identity_label_cover(2);
    const auto wide = labelcover_to_rainbow(lc, 3, {}, RainbowEdgeRule::UpTo2k);
    const auto narrow = labelcover_to_rainbow(lc, 3, {}, RainbowEdgeRule::Exactly2k);
    EXPECT_LT(narrow.unfolded_edges, wide.unfolded_edges);
    for (const auto& e : narrow.hypergraph.edges()) {
        EXPECT_TRUE(std::binary_search(wide.hypergraph.edges().begin(), wide.hypergraph.edges().end(), e));
    }
}

TEST(ThreeSatToLabelCover, Certificates) {
    const auto sat = single_clause();
    const auto c1 = certify_threesat_to_labelcover(sat, threesat_to_labelcover(sat));
    EXPECT_EQ(c1.completeness, (GapCertificate::Completeness{true, Rational(1)}));
    EXPECT_EQ(c1.soundness.bound_value, Rational(1));
    const auto bad = contradiction_3cnf();
    const auto c2 = certify_threesat_to_labelcover(bad, threesat_to_labelcover(bad));
    EXPECT_FALSE(c2.completeness.witness_present);
    EXPECT_LT(c2.soundness.bound_value, Rational(1));
}

TEST(RainbowToVbc, Examples) {
    const Hypergraph edge(3, {{0, 1, 2}});
    const auto inst = rainbow_to_vbc(edge);
    EXPECT_EQ(inst.kind(), ProblemKind::VBC);
    EXPECT_EQ(inst.dim(), 1u);
    const auto cert = certify_rainbow_to_vbc(edge, 3, inst);
    EXPECT_EQ(cert.completeness, (GapCertificate::Completeness{true, Rational(3)}));
    EXPECT_EQ(cert.soundness.bound_value, Rational(3));

    const auto fano = fano_plane();
    const auto fc = certify_rainbow_to_vbc(fano, 3, rainbow_to_vbc(fano));
    EXPECT_EQ(fc.parameters.at("two_colorable"), "false");
    EXPECT_EQ(fc.soundness.bound_value, Rational(1));
    EXPECT_THROW(rainbow_to_vbc(Hypergraph(2, {})), std::invalid_argument);
}

}  // namespace
}  // namespace vecpack
