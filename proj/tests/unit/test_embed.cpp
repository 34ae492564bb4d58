#include <gtest/gtest.h>

#include <functional>

#include "vecpack/embed.hpp"
#include "vecpack/fixtures.hpp"

namespace vecpack {
namespace {

void for_each_subset(int n, int cap, const std::function<void(const ElementSet&)>& fn) {
    ElementSet cur;
    std::function<void(int)> rec = [&](int start) {
        fn(cur);
        if (static_cast<int>(cur.size()) == cap) return;
        for (int e = start; e < n; ++e) {
            cur.push_back(e);
            rec(e + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

Embedding constant(int elements, std::vector<Rational> row) {
    return Embedding(row.size(), std::vector<std::vector<Rational>>(static_cast<std::size_t>(elements), row));
}

TEST(Embedding, Validation) {
    EXPECT_THROW(Embedding(2, {{Rational(1)}}), std::invalid_argument);
    EXPECT_THROW(Embedding(1, {{Rational(2)}}), std::invalid_argument);
    EXPECT_THROW(Embedding(1, {{Rational(-1)}}), std::invalid_argument);
    EXPECT_EQ(Embedding(1, {{Rational(1, 2)}, {Rational(1, 3)}}).norm({0, 1}), Rational(5, 6));
}

TEST(BouquetEmbedding, SingleCoreSingleton) {
    const SetSystem s(1, {{0}});
    const auto f = bouquet_embedding(s, {0}, 2, 1);
    EXPECT_EQ(f.dim(), bouquet_embedding_dim(2, 1));
    EXPECT_EQ(f[0][0], Rational(1));
    EXPECT_EQ(f[0][1], Rational(1, 2));
    EXPECT_EQ(f.norm({0}), Rational(1));
}

TEST(BouquetEmbedding, TwoSunflowers) {
    const SetSystem s(6, {{0, 3}, {0, 4}, {1, 5}});
    const auto f = bouquet_embedding(s, {0, 1}, 2, 2);
    EXPECT_EQ(f.dim(), 26u);
    VerifyOptions opts;
    opts.excluded_core = ElementSet{0, 1};
    opts.core_size_cap = 2;
    const auto rep = verify_embedding(s, f, opts);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.counterexamples.size(), 0u);
    // element 2 lies in no set
    EXPECT_EQ(f[2][0], Rational(1, 2));
    EXPECT_EQ(f[2][1], Rational(1, 2));
}

TEST(BouquetEmbedding, ZeroCoordinatesOnlyFromDefinition) {
    const SetSystem s(7, {{0, 3}, {0, 4}, {1, 5, 6}});
    const auto f = bouquet_embedding(s, {0, 1}, 3, 2);
    for (const auto& row : f.rows()) {
        for (const auto& x : row) {
            EXPECT_GE(x, Rational(0));
            EXPECT_LE(x, Rational(1));
        }
    }
}

TEST(BouquetEmbedding, Preconditions) {
    const SetSystem s(6, {{0, 3}, {0, 4}, {1, 5}});
    EXPECT_THROW(bouquet_embedding(s, {0, 1}, 1, 2), std::invalid_argument);
    EXPECT_THROW(bouquet_embedding(s, {0, 1}, 2, 1), std::invalid_argument);  // element 0 has degree 2
    EXPECT_THROW(bouquet_embedding(SetSystem(4, {{0, 1, 2}}), {0}, 2, 1), std::invalid_argument);
    EXPECT_THROW(bouquet_embedding(SetSystem(4, {{0, 3}, {1, 3}}), {0, 1}, 2, 2), std::invalid_argument);
}

TEST(BouquetEmbedding, DimensionFormula) {
    for (int k = 2; k <= 5; ++k) {
        for (int d = 1; d <= 4; ++d) {
            EXPECT_EQ(bouquet_embedding_dim(k, d), static_cast<std::size_t>(2 + 2 * k * d + k * d * k * d));
        }
    }
}

TEST(BouquetEmbedding, RandomBouquetsVerify) {
    fixtures::Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        const auto b = fixtures::random_bouquet(rng, 4, 3, 14);
        const auto f = bouquet_embedding(b.family, b.core, b.k, b.delta);
        ASSERT_EQ(f.dim(), bouquet_embedding_dim(b.k, b.delta));
        VerifyOptions opts;
        opts.excluded_core = b.core;
        opts.core_size_cap = b.k;
        ASSERT_TRUE(verify_embedding(b.family, f, opts).ok);
    }
}

TEST(BouquetEmbedding, CoreBlockAloneAdmitsCrossSets) {
    // Keep only the two-coordinate core block: the set {0, 3} joins two
    // sunflowers and must be rejected, but the core block alone accepts it.
    const SetSystem s(4, {{0, 2}, {1, 3}});
    const auto f = bouquet_embedding(s, {0, 1}, 2, 1);
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : f.rows()) rows.push_back({r[0], r[1]});
    const Embedding core_only(2, rows);
    VerifyOptions opts;
    opts.excluded_core = ElementSet{0, 1};
    opts.core_size_cap = 2;
    EXPECT_TRUE(verify_embedding(s, f, opts).ok);
    const auto rep = verify_embedding(s, core_only, opts);
    EXPECT_FALSE(rep.ok);
    ASSERT_FALSE(rep.counterexamples.empty());
    EXPECT_TRUE(std::any_of(rep.counterexamples.begin(), rep.counterexamples.end(),
                            [](const EmbeddingCounterexample& c) { return c.set == ElementSet{0, 3}; }));
}

TEST(Concat, ZerosAndNorms) {
    const auto z = concat(constant(3, {Rational(0)}), constant(3, {Rational(0)}));
    EXPECT_EQ(z.dim(), 2u);
    for (const auto& row : z.rows()) EXPECT_EQ(row, (std::vector<Rational>{0, 0}));

    fixtures::Rng rng(4);
    std::uniform_int_distribution<int> v(0, 6);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::vector<Rational>> a(5), b(5);
        for (int e = 0; e < 5; ++e) {
            a[e] = {Rational(v(rng), 6), Rational(v(rng), 6)};
            b[e] = {Rational(v(rng), 6)};
        }
        const Embedding e1(2, a), e2(1, b);
        const auto c = concat(e1, e2);
        ElementSet set;
        for (int e = 0; e < 5; ++e) {
            if (v(rng) % 2) set.push_back(e);
        }
        EXPECT_EQ(c.norm(set), std::max(e1.norm(set), e2.norm(set)));
    }
    EXPECT_THROW(concat(constant(2, {0}), constant(3, {0})), std::invalid_argument);
}

TEST(Concat, RealizesIntersection) {
    // {T : |T| <= 2} and {T : 0 not in T or |T| <= 1} over three elements
    const auto e1 = constant(3, {Rational(1, 2)});
    const Embedding e2(1, {{Rational(1)}, {Rational(1, 2)}, {Rational(1, 2)}});
    const auto c = concat(e1, e2);
    for (int mask = 0; mask < 8; ++mask) {
        ElementSet t;
        for (int e = 0; e < 3; ++e) {
            if (mask >> e & 1) t.push_back(e);
        }
        const bool in1 = t.size() <= 2;
        const bool in2 = !(mask & 1) || t.size() <= 1;
        EXPECT_EQ(c.norm(t) <= Rational(1), in1 && in2) << mask;
    }
}

TEST(FullEmbedding, TwoPairsExhaustive) {
    const SetSystem s(4, {{0, 1}, {2, 3}});
    const auto full = full_embedding(s);
    EXPECT_EQ(full.decomposition.parts.size(), 2u);
    EXPECT_EQ(full.embedding.dim(), 2 * bouquet_embedding_dim(full.k, full.delta));
    VerifyOptions opts;
    opts.size_cap = 4;
    const auto rep = verify_embedding(s, full.embedding, opts);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.sets_checked, 16u);
}

TEST(FullEmbedding, Triangle) {
    const SetSystem s(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto full = full_embedding(s);
    VerifyOptions opts;
    opts.size_cap = 3;
    EXPECT_TRUE(verify_embedding(s, full.embedding, opts).ok);
}

TEST(FullEmbedding, Preconditions) {
    EXPECT_THROW(full_embedding(SetSystem(3, {{0, 1, 2}, {0, 1}})), std::invalid_argument);
    EXPECT_THROW(full_embedding(SetSystem(3, {})), std::invalid_argument);
}

TEST(FullEmbedding, MatchesMembershipOracle) {
    fixtures::Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        const auto s = fixtures::random_simple_family(rng, 3, 2, 12);
        const auto full = full_embedding(s);
        const auto st = analyze(s);
        EXPECT_LE(full.embedding.dim(), full.decomposition.parts.size() * bouquet_embedding_dim(st.k, st.delta));
        for_each_subset(s.universe_size(), st.k + 1, [&](const ElementSet& set) {
            ASSERT_EQ(full.embedding.norm(set) <= Rational(1), in_downward_closure(s, set));
        });
    }
}

TEST(FullEmbedding, NormIsMonotone) {
    fixtures::Rng rng(8);
    const auto s = fixtures::random_simple_family(rng, 3, 2, 10);
    const auto f = full_embedding(s).embedding;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 200; ++t) {
        ElementSet small, big;
        for (int e = 0; e < s.universe_size(); ++e) {
            const bool in_big = coin(rng);
            if (in_big) big.push_back(e);
            if (in_big && coin(rng)) small.push_back(e);
        }
        EXPECT_LE(f.norm(small), f.norm(big));
    }
}

TEST(Verify, AllZeroEmbeddingFails) {
    const SetSystem s(2, {{0}});
    const auto rep = verify_embedding(s, constant(2, {Rational(0)}), {});
    EXPECT_FALSE(rep.ok);
    const auto it = std::find_if(rep.counterexamples.begin(), rep.counterexamples.end(),
                                 [](const EmbeddingCounterexample& c) { return c.set == ElementSet{0, 1}; });
    ASSERT_NE(it, rep.counterexamples.end());
    EXPECT_FALSE(it->expected_member);
    EXPECT_EQ(it->norm, Rational(0));
}

TEST(Verify, RefusesIncompleteCapUnlessForced) {
    const SetSystem s(4, {{0, 1}, {2, 3}});
    const auto f = full_embedding(s).embedding;
    VerifyOptions opts;
    opts.size_cap = 2;
    EXPECT_THROW(verify_embedding(s, f, opts), std::invalid_argument);
    opts.force = true;
    EXPECT_TRUE(verify_embedding(s, f, opts).ok);
}

}  // namespace
}  // namespace vecpack
