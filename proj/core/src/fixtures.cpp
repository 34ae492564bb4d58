#include "vecpack/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vecpack::fixtures {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
}

Graph empty_graph(int n) { return Graph(n, {}); }

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("all_graphs: n must lie in [0,8]");
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) e.push_back(slots[i]);
        }
        out.emplace_back(n, std::move(e));
    }
    return out;
}

Graph random_graph(Rng& rng, int n, int num, int den) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (uniform(rng, 0, den - 1) < num) e.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(e));
}

Hypergraph fano_plane() {
    return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph random_hypergraph(Rng& rng, int n, int edges, int max_edge_size) {
    std::vector<Hyperedge> out;
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < edges && n > 0; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        const int s = uniform(rng, 1, std::min(max_edge_size, n));
        out.push_back(make_edge({pool.begin(), pool.begin() + s}));
    }
    return Hypergraph(n, std::move(out));
}

Bouquet random_bouquet(Rng& rng, int max_k, int max_delta, int max_universe) {
    Bouquet b;
    b.k = uniform(rng, 2, max_k);
    b.delta = uniform(rng, 1, max_delta);
    const int cores = uniform(rng, 1, std::max(1, std::min(4, max_universe / 2)));
    int next = cores;  // petal elements are numbered after the core
    std::vector<ElementSet> sets;
    for (int u = 0; u < cores; ++u) {
        const int degree = uniform(rng, 1, b.delta);
        bool has_singleton = false;
        for (int d = 0; d < degree; ++d) {
            int size = uniform(rng, 1, b.k);
            size = std::min(size, 1 + max_universe - next);
            if (size == 1) {
                if (has_singleton) continue;
                has_singleton = true;
            }
            ElementSet s{u};
            for (int i = 1; i < size; ++i) s.push_back(next++);
            sets.push_back(std::move(s));
        }
        if (!has_singleton && std::none_of(sets.begin(), sets.end(), [&](const ElementSet& s) { return s.front() == u; })) {
            sets.push_back({u});
        }
    }
    const int spare = std::max(0, std::min(2, max_universe - next));
    const int universe = next + uniform(rng, 0, spare);
    b.family = SetSystem(universe, std::move(sets));
    for (int u = 0; u < cores; ++u) b.core.push_back(u);
    return b;
}

SetSystem random_simple_family(Rng& rng, int max_k, int max_delta, int max_universe) {
    const int n = uniform(rng, 2, max_universe);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<ElementSet> sets;
    std::set<ElementSet> seen;
    std::vector<Element> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    const int attempts = 4 * n;
    for (int a = 0; a < attempts; ++a) {
        std::shuffle(pool.begin(), pool.end(), rng);
        const int size = uniform(rng, 2, std::min(max_k, n));
        ElementSet s;
        for (Element e : pool) {
            if (static_cast<int>(s.size()) == size) break;
            if (degree[e] < max_delta) s.push_back(e);
        }
        if (static_cast<int>(s.size()) < 2) continue;
        std::sort(s.begin(), s.end());
        const bool simple = std::all_of(sets.begin(), sets.end(), [&](const ElementSet& t) { return intersection_size(s, t) <= 1; });
        if (!simple || seen.count(s)) continue;
        for (Element e : s) ++degree[e];
        seen.insert(s);
        sets.push_back(std::move(s));
    }
    if (sets.empty()) sets.push_back({0, 1});
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const auto& s : sets) {
        for (Element e : s) covered[e] = true;
    }
    for (Element e = 0; e < n; ++e) {
        if (!covered[e]) sets.push_back({e});
    }
    return SetSystem(n, std::move(sets));
}

PackingInstance random_instance(Rng& rng, ProblemKind kind, int jobs, int dim, int den, int machines) {
    std::vector<VectorJob> out;
    for (int j = 0; j < jobs; ++j) {
        VectorJob job;
        for (int c = 0; c < dim; ++c) job.coords.emplace_back(uniform(rng, 0, den), den);
        out.push_back(std::move(job));
    }
    return PackingInstance(kind, static_cast<std::size_t>(dim), std::move(out),
                           kind == ProblemKind::VS ? std::optional<int>(machines) : std::nullopt);
}

Cnf random_3cnf(Rng& rng, int variables, int clauses) {
    if (variables < 3) throw std::invalid_argument("random_3cnf needs at least 3 variables");
    Cnf f{variables, {}};
    std::vector<int> pool(static_cast<std::size_t>(variables));
    std::iota(pool.begin(), pool.end(), 0);
    for (int c = 0; c < clauses; ++c) {
        std::shuffle(pool.begin(), pool.end(), rng);
        Clause clause;
        for (int j = 0; j < 3; ++j) clause.push_back(Literal{pool[j], uniform(rng, 0, 1) == 1});
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

Cnf single_clause() { return Cnf{3, {{{0, false}, {1, false}, {2, false}}}}; }

Cnf contradiction_3cnf() {
    Cnf f{3, {}};
    for (bool neg_x : {false, true}) {
        for (int m = 0; m < 4; ++m) {
            f.clauses.push_back({{0, neg_x}, {1, (m & 1) != 0}, {2, (m & 2) != 0}});
        }
    }
    return f;
}

TruthTableFn random_truth_table(Rng& rng, int k, int n) {
    TruthTableFn f{k, n, {}};
    const Cube cube(k, n, UINT64_MAX);
    for (int i = 0; i < cube.size(); ++i) f.table.push_back(static_cast<std::uint8_t>(uniform(rng, 0, 1)));
    return f;
}

LabelCover identity_label_cover(int sigma) {
    std::vector<Label> id(static_cast<std::size_t>(sigma));
    std::iota(id.begin(), id.end(), 0);
    return LabelCover(1, 1, sigma, sigma, {LcEdge{0, 0, id}});
}

LabelCover conflict_label_cover() {
    return LabelCover(1, 1, 2, 2, {LcEdge{0, 0, {0, 1}}, LcEdge{0, 0, {1, 0}}});
}

LabelCover star_label_cover(int neighbors) {
    std::vector<LcEdge> e;
    for (int v = 0; v < neighbors; ++v) e.push_back(LcEdge{v, 0, {0}});
    return LabelCover(neighbors, 1, 1, 1, std::move(e));
}

LabelCover satisfiable_star_label_cover() {
    return LabelCover(3, 1, 2, 2, {LcEdge{0, 0, {0, 1}}, LcEdge{1, 0, {0, 1}}, LcEdge{2, 0, {0, 1}}});
}

LabelCover conflicting_star_label_cover() {
    return LabelCover(3, 1, 2, 2, {LcEdge{0, 0, {0, 0}}, LcEdge{1, 0, {1, 1}}, LcEdge{2, 0, {0, 1}}});
}

LabelCover split_label_cover() {
    return LabelCover(1, 1, 2, 2, {LcEdge{0, 0, {0, 0}}, LcEdge{0, 0, {1, 1}}});
}

}  // namespace vecpack::fixtures
