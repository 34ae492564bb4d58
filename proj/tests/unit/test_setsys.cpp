#include <gtest/gtest.h>

#include <functional>

#include "vecpack/fixtures.hpp"
#include "vecpack/setsys.hpp"

namespace vecpack {
namespace {

// Every subset of {0..n-1} with at most `cap` elements.
void for_each_small_subset(int n, int cap, const std::function<void(const ElementSet&)>& fn) {
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

TEST(SetSystem, Validation) {
    EXPECT_THROW(SetSystem(2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(SetSystem(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(SetSystem(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_EQ(SetSystem(3, {{1, 0}, {2}}), SetSystem(3, {{2}, {0, 1}}));
}

TEST(Analyze, PathOfPairs) {
    const auto st = analyze(SetSystem(3, {{0, 1}, {1, 2}}));
    EXPECT_TRUE(st.simple);
    EXPECT_EQ(st.k, 2);
    EXPECT_EQ(st.delta, 2);
    EXPECT_TRUE(st.nontrivial);
    EXPECT_FALSE(st.downward_closed);
}

TEST(Analyze, NonSimpleAndTrivial) {
    EXPECT_FALSE(analyze(SetSystem(3, {{0, 1, 2}, {0, 1}})).simple);
    EXPECT_FALSE(analyze(SetSystem(1, {})).nontrivial);
    EXPECT_TRUE(analyze(SetSystem(2, {{0, 1}, {0}, {1}, {}})).downward_closed);
}

TEST(DownwardClosure, Membership) {
    EXPECT_TRUE(in_downward_closure(SetSystem(3, {{0, 1, 2}}), {0, 2}));
    EXPECT_FALSE(in_downward_closure(SetSystem(4, {{0, 1}, {2, 3}}), {1, 2}));
    EXPECT_TRUE(in_downward_closure(SetSystem(4, {{0, 1}}), {2, 3}, ElementSet{0}, 2));
    EXPECT_FALSE(in_downward_closure(SetSystem(4, {{0, 1}}), {0, 3}, ElementSet{0}, 2));
    EXPECT_FALSE(in_downward_closure(SetSystem(5, {{0, 1}}), {2, 3, 4}, ElementSet{0}, 2));
    EXPECT_TRUE(in_downward_closure(SetSystem(2, {{0, 1}}), {}));
    EXPECT_THROW(in_downward_closure(SetSystem(2, {{0, 1}}), {5}), std::invalid_argument);
}

TEST(Bouquet, Axioms) {
    EXPECT_TRUE(is_sunflower_bouquet(SetSystem(6, {{0, 3}, {0, 4}, {1, 5}}), {0, 1}));
    EXPECT_FALSE(is_sunflower_bouquet(SetSystem(4, {{0, 3}, {1, 3}}), {0, 1}));
    EXPECT_FALSE(is_sunflower_bouquet(SetSystem(4, {{2, 3}}), {0}));
    EXPECT_TRUE(is_sunflower_bouquet(SetSystem(1, {{0}}), {0}));  // singletons allowed
    EXPECT_THROW(is_sunflower_bouquet(SetSystem(2, {{0, 1}}), {}), std::invalid_argument);
}

TEST(Decompose, TwoDisjointPairs) {
    const auto d = decompose(SetSystem(4, {{0, 1}, {2, 3}}));
    ASSERT_EQ(d.parts.size(), 2u);
    EXPECT_EQ(d.parts[0].core, (ElementSet{0, 2}));
    EXPECT_EQ(d.parts[1].core, (ElementSet{1, 3}));
    for (const auto& p : d.parts) EXPECT_TRUE(is_sunflower_bouquet(p.family, p.core));
}

TEST(Decompose, SinglePair) {
    const auto d = decompose(SetSystem(2, {{0, 1}}));
    ASSERT_EQ(d.parts.size(), 2u);
    EXPECT_EQ(d.parts[0].core, ElementSet{0});
    EXPECT_EQ(d.parts[1].core, ElementSet{1});
}

TEST(Decompose, Preconditions) {
    EXPECT_THROW(decompose(SetSystem(3, {{0, 1, 2}, {0, 1}})), std::invalid_argument);
    EXPECT_THROW(decompose(SetSystem(3, {{0, 1}})), std::invalid_argument);
    EXPECT_THROW(decompose(SetSystem(2, {{0}, {1}})), std::invalid_argument);
}

TEST(ConflictGraph, PairsShareNeighbourhoods) {
    const auto g = conflict_graph(SetSystem(4, {{0, 1}, {1, 2}, {3}}));
    EXPECT_EQ(g[0], (std::vector<Element>{1, 2}));
    EXPECT_EQ(g[1], (std::vector<Element>{0, 2}));
    EXPECT_TRUE(g[3].empty());
}

TEST(Decompose, PropertiesOnRandomFamilies) {
    fixtures::Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto s = fixtures::random_simple_family(rng, 3, 3, 12);
        const auto st = analyze(s);
        const auto d = decompose(s);
        const auto conflict = conflict_graph(s);
        std::size_t max_deg = 0;
        for (const auto& adj : conflict) max_deg = std::max(max_deg, adj.size());
        EXPECT_LE(d.parts.size(), max_deg + 1);
        EXPECT_LE(static_cast<int>(d.parts.size()), st.k * st.k * st.delta * st.delta);

        // cores partition the universe
        std::vector<int> seen(static_cast<std::size_t>(s.universe_size()), 0);
        for (const auto& p : d.parts) {
            EXPECT_TRUE(is_sunflower_bouquet(p.family, p.core));
            EXPECT_TRUE(analyze(p.family).simple);
            for (Element e : p.core) ++seen[e];
        }
        for (int c : seen) EXPECT_EQ(c, 1);

        // the augmented part families intersect to the downward closure
        for_each_small_subset(s.universe_size(), st.k + 1, [&](const ElementSet& t) {
            bool all = true;
            for (const auto& p : d.parts) all = all && in_downward_closure(p.family, t, p.core, st.k);
            ASSERT_EQ(all, in_downward_closure(s, t)) << t.size();
        });
    }
}

}  // namespace
}  // namespace vecpack
