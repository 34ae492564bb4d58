#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vecpack/errors.hpp"
#include "vecpack/fixtures.hpp"
#include "vecpack/labelcover.hpp"

namespace vecpack {
namespace {

using namespace fixtures;

TEST(LabelCover, Validation) {
    EXPECT_THROW(LabelCover(1, 1, 2, 2, {LcEdge{0, 0, {0}}}), std::invalid_argument);
    EXPECT_THROW(LabelCover(1, 1, 2, 2, {LcEdge{0, 1, {0, 1}}}), std::invalid_argument);
    EXPECT_THROW(LabelCover(1, 1, 2, 2, {LcEdge{0, 0, {0, 2}}}), std::invalid_argument);
    EXPECT_THROW(LabelCover(1, 1, 1, 2, {}), std::invalid_argument);
    const auto lc = satisfiable_star_label_cover();
    EXPECT_EQ(lc.max_right_degree(), 3);
    EXPECT_EQ(lc.right_incidence()[0], (std::vector<int>{0, 1, 2}));
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(identity_label_cover(3), {{2}, {2}}), Rational(1));
    EXPECT_EQ(evaluate(identity_label_cover(3), {{2}, {1}}), Rational(0));
    EXPECT_EQ(evaluate(conflict_label_cover(), {{0}, {0}}), Rational(1, 2));
    EXPECT_EQ(evaluate(LabelCover(2, 1, 1, 1, {}), {{0, 0}, {0}}), Rational(1));
    EXPECT_THROW(evaluate(identity_label_cover(2), {{0, 0}, {0}}), std::invalid_argument);
    EXPECT_THROW(evaluate(identity_label_cover(2), {{2}, {0}}), std::invalid_argument);
}

TEST(BestLabeling, Examples) {
    EXPECT_EQ(best_labeling(split_label_cover()).value, Rational(1, 2));
    EXPECT_EQ(best_labeling(conflict_label_cover()).value, Rational(1, 2));
    EXPECT_EQ(best_labeling(conflicting_star_label_cover()).value, Rational(2, 3));
    const auto id = best_labeling(identity_label_cover(3));
    EXPECT_EQ(id.value, Rational(1));
    EXPECT_EQ(id.witness, (Labeling{{0}, {0}}));
    EXPECT_EQ(best_labeling(LabelCover(1, 1, 2, 2, {})).value, Rational(1));
}

TEST(BestLabeling, WitnessAchievesValue) {
    Rng rng(5);
    std::uniform_int_distribution<int> small(1, 3);
    for (int t = 0; t < 60; ++t) {
        const int left = small(rng), right = small(rng), sr = small(rng);
        const int sl = sr + small(rng) - 1;
        std::uniform_int_distribution<int> lv(0, left - 1), rv(0, right - 1), lab(0, sr - 1);
        std::vector<LcEdge> edges;
        for (int e = 0; e < small(rng) + 1; ++e) {
            std::vector<Label> pi(static_cast<std::size_t>(sl));
            for (auto& p : pi) p = lab(rng);
            edges.push_back(LcEdge{lv(rng), rv(rng), pi});
        }
        const LabelCover lc(left, right, sl, sr, edges);
        const auto best = best_labeling(lc);
        ASSERT_EQ(evaluate(lc, best.witness), best.value);

        // brute force over every labeling of both sides
        const int total = left + right;
        std::vector<int> digits(static_cast<std::size_t>(total), 0);
        Rational top(0);
        while (true) {
            Labeling l{{digits.begin(), digits.begin() + left}, {digits.begin() + left, digits.end()}};
            top = std::max(top, evaluate(lc, l));
            int i = 0;
            while (i < total && ++digits[i] == (i < left ? sl : sr)) digits[i++] = 0;
            if (i == total) break;
        }
        ASSERT_EQ(best.value, top);
    }
}

TEST(BestLabeling, CapIsEnforced) {
    SearchCaps caps;
    caps.labeling_work = 10;
    EXPECT_THROW(best_labeling(conflicting_star_label_cover(), caps), CapExceeded);
}

TEST(ThreeSat, SingleClause) {
    const auto f = single_clause();
    EXPECT_EQ(satisfying_masks(f.clauses[0]), (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
    const auto lc = threesat_to_labelcover(f);
    EXPECT_EQ(lc.left(), 1);
    EXPECT_EQ(lc.right(), 3);
    EXPECT_EQ(lc.sigma_left(), 7);
    EXPECT_EQ(lc.sigma_right(), 2);
    EXPECT_EQ(lc.edges().size(), 3u);
    EXPECT_EQ(best_labeling(lc).value, Rational(1));
}

TEST(ThreeSat, NegatedLiteralsShiftTheMasks) {
    const Clause c{{0, true}, {1, false}, {2, false}};
    // only the mask making x0 = 1, x1 = x2 = 0 fails
    EXPECT_EQ(satisfying_masks(c), (std::vector<int>{0, 2, 3, 4, 5, 6, 7}));
}

TEST(ThreeSat, Contradiction) {
    const auto f = contradiction_3cnf();
    EXPECT_FALSE(oracle::satisfiable(f));
    EXPECT_LT(best_labeling(threesat_to_labelcover(f)).value, Rational(1));
}

TEST(ThreeSat, Preconditions) {
    EXPECT_THROW(threesat_to_labelcover(Cnf{3, {{{0, false}, {0, true}, {1, false}}}}), std::invalid_argument);
    EXPECT_THROW(threesat_to_labelcover(Cnf{2, {{{0, false}, {1, false}, {2, false}}}}), std::invalid_argument);
    EXPECT_THROW(threesat_to_labelcover(Cnf{3, {{{0, false}, {1, false}}}}), std::invalid_argument);
}

TEST(ThreeSat, ValueOneIffSatisfiable) {
    Rng rng(50);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_3cnf(rng, 4, 8 + t % 10);
        const auto best = best_labeling(threesat_to_labelcover(f));
        ASSERT_EQ(best.value == Rational(1), oracle::satisfiable(f)) << t;
        if (best.value == Rational(1)) {
            std::vector<bool> a;
            for (int v : best.witness.right) a.push_back(v == 1);
            ASSERT_TRUE(satisfies(f, a));
        }
    }
}

}  // namespace
}  // namespace vecpack
