#include <gtest/gtest.h>

#include <random>

#include "vecpack/instance.hpp"
#include "vecpack/rational.hpp"

namespace vecpack {
namespace {

VectorJob job(std::initializer_list<Rational> xs) { return VectorJob{std::vector<Rational>(xs)}; }

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(2, 4).str(), "1/2");
    EXPECT_EQ(Rational(-3, -6).str(), "1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseAcceptsOnlyCanonicalText) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_EQ(Rational::parse("0"), Rational(0));
    for (const char* bad : {"2/4", "1/1", "+3", " 1", "1/", "/2", "1/-2", "01", "1/0", "", "abc", "1.5", "-0"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, ExactArithmetic) {
    const Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(-2, 3).inverse(), Rational(-3, 2));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Rational, NeverOverflows) {
    Rational x(1);
    for (int i = 0; i < 200; ++i) x *= Rational(1'000'000'007, 3);
    for (int i = 0; i < 200; ++i) x /= Rational(1'000'000'007, 3);
    EXPECT_EQ(x, Rational(1));
}

TEST(Rational, ExactRoot) {
    EXPECT_EQ(exact_root(Rational(4, 9), 2), Rational(2, 3));
    EXPECT_EQ(exact_root(Rational(27, 8), 3), Rational(3, 2));
    EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
    EXPECT_EQ(exact_root(Rational(5), 1), Rational(5));
}

TEST(Rational, RandomOperationsKeepLaws) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-50, 50), q(1, 30);
    for (int t = 0; t < 10000; ++t) {
        const Rational a(d(rng), q(rng)), b(d(rng), q(rng)), c(d(rng), q(rng));
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        if (a.sign() != 0) ASSERT_EQ(a * a.inverse(), Rational(1));
        const auto r = a * b - c;
        ASSERT_EQ(Rational::parse(r.str()), r);  // canonical form survives
    }
}

TEST(Instance, Validation) {
    EXPECT_THROW(PackingInstance(ProblemKind::VBP, 0, {}), std::invalid_argument);
    EXPECT_THROW(PackingInstance(ProblemKind::VBP, 1, {job({Rational(3, 2)})}), std::invalid_argument);
    EXPECT_THROW(PackingInstance(ProblemKind::VBP, 1, {job({Rational(-1, 2)})}), std::invalid_argument);
    EXPECT_THROW(PackingInstance(ProblemKind::VBP, 2, {job({Rational(1)})}), std::invalid_argument);
    EXPECT_THROW(PackingInstance(ProblemKind::VS, 1, {job({Rational(1)})}), std::invalid_argument);
    EXPECT_THROW(PackingInstance(ProblemKind::VBP, 1, {job({Rational(1)})}, 2), std::invalid_argument);
    EXPECT_THROW(PackingInstance(ProblemKind::VS, 1, {job({Rational(1)})}, 0), std::invalid_argument);
    EXPECT_NO_THROW(PackingInstance(ProblemKind::VS, 1, {job({Rational(1)})}, 1));
}

TEST(Instance, ZeroOneDetection) {
    EXPECT_TRUE(PackingInstance(ProblemKind::VBP, 2, {job({0, 1}), job({1, 1})}).is_zero_one());
    EXPECT_FALSE(PackingInstance(ProblemKind::VBP, 1, {job({Rational(1, 2)})}).is_zero_one());
}

TEST(Evaluate, VbpUnitJobsInSingletons) {
    const PackingInstance inst(ProblemKind::VBP, 1, {job({1}), job({1}), job({1})});
    const auto r = evaluate(inst, Assignment{{0, 1, 2}, 3});
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.value.exact, Rational(3));
    EXPECT_FALSE(evaluate(inst, Assignment{{0, 0, 1}, 2}).feasible);
}

TEST(Evaluate, VsMakespanIsPigeonholed) {
    const PackingInstance inst(ProblemKind::VS, 1, {job({1}), job({1}), job({1})}, 2);
    Rational best(100);
    for (int mask = 0; mask < 8; ++mask) {
        Assignment a{{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}, 2};
        best = std::min(best, *evaluate(inst, a).value.exact);
    }
    EXPECT_EQ(best, Rational(2));
}

TEST(Evaluate, VsLrNorm) {
    const PackingInstance inst(ProblemKind::VS, 2, {job({1, 0}), job({0, 1})}, 1);
    const auto r = evaluate(inst, Assignment{{0, 0}, 1}, Norm::l(2));
    ASSERT_TRUE(r.value.exact.has_value());
    EXPECT_EQ(*r.value.exact, Rational(1));

    // two machines, loads (1,1) and (1,0): column 0 gives sqrt(2), irrational
    const PackingInstance three(ProblemKind::VS, 2, {job({1, 1}), job({1, 0})}, 2);
    const auto s = evaluate(three, Assignment{{0, 1}, 2}, Norm::l(2));
    EXPECT_FALSE(s.value.exact.has_value());
    EXPECT_EQ(s.value.radicand, Rational(2));
    EXPECT_EQ(s.value.root, 2u);
    EXPECT_NEAR(s.value.approx, 1.41421356, 1e-6);
}

TEST(Evaluate, VbcCountsCoveringParts) {
    const PackingInstance inst(ProblemKind::VBC, 1, {job({Rational(1, 2)}), job({Rational(1, 2)}), job({1})});
    const auto good = evaluate(inst, Assignment{{0, 0, 1}, 2});
    EXPECT_TRUE(good.feasible);
    EXPECT_EQ(good.value.exact, Rational(2));
    const auto bad = evaluate(inst, Assignment{{0, 1, 2}, 3});
    EXPECT_FALSE(bad.feasible);
    EXPECT_EQ(bad.value.exact, Rational(1));
}

TEST(Evaluate, RejectsMalformedAssignments) {
    const PackingInstance vs(ProblemKind::VS, 1, {job({1}), job({1})}, 2);
    EXPECT_THROW(evaluate(vs, Assignment{{0}, 2}), std::invalid_argument);
    EXPECT_THROW(evaluate(vs, Assignment{{0, 2}, 2}), std::invalid_argument);
    EXPECT_THROW(evaluate(vs, Assignment{{0, 0}, 1}), std::invalid_argument);
}

TEST(Evaluate, LoadsAreMonotoneInJobs) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(0, 4);
    for (int t = 0; t < 100; ++t) {
        std::vector<VectorJob> jobs;
        for (int i = 0; i < 4; ++i) jobs.push_back(job({Rational(c(rng), 4), Rational(c(rng), 4)}));
        const PackingInstance small(ProblemKind::VS, 2, {jobs[0], jobs[1], jobs[2]}, 2);
        const PackingInstance big(ProblemKind::VS, 2, jobs, 2);
        const auto a = evaluate(small, Assignment{{0, 1, 0}, 2});
        const auto b = evaluate(big, Assignment{{0, 1, 0, 1}, 2});
        for (int p = 0; p < 2; ++p) {
            for (int d = 0; d < 2; ++d) ASSERT_LE(a.loads[p][d], b.loads[p][d]);
        }
        ASSERT_LE(*a.value.exact, *b.value.exact);
    }
}

TEST(Evaluate, ZeroOneMakespanIsInteger) {
    const PackingInstance inst(ProblemKind::VS, 2, {job({1, 0}), job({1, 1}), job({0, 1})}, 2);
    for (int mask = 0; mask < 8; ++mask) {
        Assignment a{{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}, 2};
        EXPECT_TRUE(evaluate(inst, a).value.exact->is_integer());
    }
}

}  // namespace
}  // namespace vecpack
