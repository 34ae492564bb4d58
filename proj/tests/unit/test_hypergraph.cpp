#include <gtest/gtest.h>

#include <functional>

#include "vecpack/errors.hpp"
#include "vecpack/fixtures.hpp"
#include "vecpack/hypergraph.hpp"

namespace vecpack {
namespace {

TEST(Hypergraph, Construction) {
    EXPECT_THROW(Hypergraph(3, {{}}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, {{0, 3}}), std::invalid_argument);
    const Hypergraph h(3, {{2, 0}, {0, 2}, {1}});
    EXPECT_EQ(h.edges(), (std::vector<Hyperedge>{{0, 2}, {1}}));
    EXPECT_FALSE(h.uniformity().has_value());
    EXPECT_EQ(fixtures::fano_plane().uniformity(), 3);
}

TEST(ColorCheck, Examples) {
    const Hypergraph h(3, {{0, 1, 2}});
    const auto good = color_check(h, 3, {0, 1, 2});
    EXPECT_TRUE(good.proper);
    EXPECT_EQ(good.balance, 1);
    EXPECT_TRUE(good.rainbow);
    const auto mono = color_check(h, 3, {0, 0, 0});
    EXPECT_FALSE(mono.proper);
    EXPECT_EQ(mono.balance, 3);
    EXPECT_FALSE(mono.rainbow);
    const auto path = color_check(Hypergraph(3, {{0, 1}, {1, 2}}), 2, {0, 1, 0});
    EXPECT_TRUE(path.proper);
    EXPECT_TRUE(path.rainbow);
    EXPECT_EQ(path.balance, 1);
    EXPECT_THROW(color_check(h, 2, {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(color_check(h, 3, {0, 1}), std::invalid_argument);
}

TEST(SolveColoring, Examples) {
    EXPECT_FALSE(solve_coloring(fixtures::fano_plane(), 2, ColoringGoal::two_color()).has_value());
    const Hypergraph edge(4, {{0, 1, 2, 3}});
    const auto r = solve_coloring(edge, 4, ColoringGoal::rainbow());
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(color_check(edge, 4, *r).rainbow);
    const auto b = solve_coloring(edge, 2, ColoringGoal::balanced(2));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(color_check(edge, 2, *b).balance, 2);
    EXPECT_FALSE(solve_coloring(edge, 2, ColoringGoal::balanced(1)).has_value());
}

TEST(SolveColoring, CapIsEnforced) {
    SearchCaps caps;
    caps.coloring_nodes = 3;
    EXPECT_THROW(solve_coloring(fixtures::fano_plane(), 2, ColoringGoal::two_color(), caps), CapExceeded);
}

// Naive oracle: enumerate all k^n colorings.
bool exists_coloring(const Hypergraph& h, int k, const std::function<bool(const ColorCheck&)>& ok) {
    std::vector<int> c(static_cast<std::size_t>(h.n()), 0);
    while (true) {
        if (ok(color_check(h, k, c))) return true;
        int i = 0;
        while (i < h.n() && ++c[i] == k) c[i++] = 0;
        if (i == h.n()) return false;
    }
}

TEST(SolveColoring, AgreesWithEnumeration) {
    fixtures::Rng rng(12);
    std::uniform_int_distribution<int> pick(1, 4);
    for (int t = 0; t < 300; ++t) {
        const int n = pick(rng);
        const auto h = fixtures::random_hypergraph(rng, n, pick(rng), n);
        for (int k = 1; k <= 3; ++k) {
            const auto proper = solve_coloring(h, k, ColoringGoal::proper());
            ASSERT_EQ(proper.has_value(), exists_coloring(h, k, [](const ColorCheck& c) { return c.proper; }));
            if (proper) ASSERT_TRUE(color_check(h, k, *proper).proper);
            const auto rainbow = solve_coloring(h, k, ColoringGoal::rainbow());
            ASSERT_EQ(rainbow.has_value(), exists_coloring(h, k, [](const ColorCheck& c) { return c.rainbow; }));
            const auto bal = solve_coloring(h, k, ColoringGoal::balanced(2));
            ASSERT_EQ(bal.has_value(), exists_coloring(h, k, [](const ColorCheck& c) { return c.balance <= 2; }));
        }
    }
}

TEST(ColoringProperties, RainbowAndBalanceImplyProper) {
    fixtures::Rng rng(6);
    std::uniform_int_distribution<int> color(0, 2);
    for (int t = 0; t < 200; ++t) {
        const auto h = fixtures::random_hypergraph(rng, 6, 4, 4);
        std::vector<int> c(6);
        for (auto& x : c) x = color(rng);
        const auto check = color_check(h, 3, c);
        if (check.rainbow) EXPECT_TRUE(check.proper);
        bool all_bigger = true;
        for (const auto& e : h.edges()) all_bigger = all_bigger && check.balance < static_cast<int>(e.size());
        if (all_bigger) EXPECT_TRUE(check.proper);
    }
}

TEST(Cube, RowMajor) {
    const Cube cube(3, 2, 100);
    EXPECT_EQ(cube.size(), 9);
    EXPECT_EQ(cube.decode(5), (std::vector<int>{1, 2}));
    EXPECT_EQ(cube.encode({2, 1}), 7);
    EXPECT_EQ(cube.coord(7, 0), 2);
    EXPECT_THROW(Cube(3, 5, 100), CapExceeded);
}

TEST(Hrnk, Examples) {
    const auto h = gen_H_r_n_k(2, 1, 0);
    EXPECT_EQ(h.n(), 2);
    EXPECT_EQ(h.edges(), (std::vector<Hyperedge>{{0, 1}}));
    // k=3, n=1: the only 3-set of [3] is {0,1,2}, missing nothing
    EXPECT_EQ(gen_H_r_n_k(3, 1, 1).edges(), (std::vector<Hyperedge>{{0, 1, 2}}));
    for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        const auto hk = gen_H_r_n_k(k, n, k / 2);
        EXPECT_EQ(hk.uniformity(), k);
        EXPECT_FALSE(solve_coloring(hk, 2, ColoringGoal::two_color()).has_value()) << k << "," << n;
    }
}

TEST(Hrnk, EdgesMatchDefinition) {
    const int k = 3, n = 2, r = 1;
    const auto h = gen_H_r_n_k(k, n, r);
    const Cube cube(k, n, 100);
    std::size_t expected = 0;
    for (int a = 0; a < 9; ++a) {
        for (int b = a + 1; b < 9; ++b) {
            for (int c = b + 1; c < 9; ++c) {
                int missing = 0;
                for (int i = 0; i < n; ++i) {
                    std::vector<bool> seen(3, false);
                    for (int x : {a, b, c}) seen[cube.coord(x, i)] = true;
                    missing += static_cast<int>(std::count(seen.begin(), seen.end(), false));
                }
                if (missing <= r) {
                    ++expected;
                    EXPECT_TRUE(std::binary_search(h.edges().begin(), h.edges().end(), Hyperedge{a, b, c}));
                }
            }
        }
    }
    EXPECT_EQ(h.size(), expected);
}

TruthTableFn table(int k, int n, const std::function<int(const std::vector<int>&)>& f) {
    const Cube cube(k, n, 1 << 20);
    TruthTableFn t{k, n, {}};
    for (int x = 0; x < cube.size(); ++x) t.table.push_back(static_cast<std::uint8_t>(f(cube.decode(x))));
    return t;
}

TEST(Gadget, DictatorThresholdIsOneFixing) {
    const auto f = table(3, 2, [](const std::vector<int>& x) { return x[0] != 0 ? 1 : 0; });
    const auto g = gadget_check(f);
    EXPECT_TRUE(g.one_fixing);
    ASSERT_TRUE(g.witness.has_value());
    EXPECT_EQ(*g.witness, (OneFixingWitness{0, 0, 1}));
    EXPECT_TRUE(g.two_coloring_property);
}

TEST(Gadget, ConstantFunctionHasMonochromaticCover) {
    const auto g = gadget_check(table(3, 2, [](const std::vector<int>&) { return 0; }));
    EXPECT_FALSE(g.two_coloring_property);
    EXPECT_FALSE(g.one_fixing);
    ASSERT_FALSE(g.monochromatic_cover.empty());
    EXPECT_LE(g.monochromatic_cover.size(), 6u);
}

TEST(Gadget, SmallestScaleExhaustive) {
    for (int mask = 0; mask < 8; ++mask) {
        const auto f = table(3, 1, [&](const std::vector<int>& x) { return (mask >> x[0]) & 1; });
        const auto g = gadget_check(f);
        EXPECT_EQ(g.two_coloring_property, mask != 0 && mask != 7);
        if (g.two_coloring_property) EXPECT_TRUE(g.one_fixing);
    }
}

TEST(Gadget, CoverIsMonochromaticAndCovering) {
    fixtures::Rng rng(21);
    const Cube cube(3, 2, 100);
    for (int t = 0; t < 500; ++t) {
        const auto f = fixtures::random_truth_table(rng, 3, 2);
        const auto g = gadget_check(f);
        if (g.two_coloring_property) {
            ASSERT_TRUE(g.one_fixing);
            continue;
        }
        ASSERT_FALSE(g.monochromatic_cover.empty());
        ASSERT_LE(g.monochromatic_cover.size(), 6u);
        const auto value = f.table[g.monochromatic_cover[0]];
        for (int i = 0; i < 2; ++i) {
            std::vector<bool> seen(3, false);
            for (int x : g.monochromatic_cover) {
                ASSERT_EQ(f.table[x], value);
                seen[cube.coord(x, i)] = true;
            }
            ASSERT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        }
    }
}

TEST(Gadget, Validation) {
    TruthTableFn bad{3, 2, std::vector<std::uint8_t>(8, 0)};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    TruthTableFn two{2, 1, {0, 2}};
    EXPECT_THROW(two.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace vecpack
