#include "vecpack/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vecpack/errors.hpp"

namespace vecpack {

Hyperedge make_edge(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Hypergraph::Hypergraph(int n, std::vector<Hyperedge> edges) : n_(n) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        if (e.empty()) throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
        }
        if (e.front() < 0 || e.back() >= n_) {
            throw std::invalid_argument("edge " + std::to_string(i) + " has a vertex outside [0," +
                                        std::to_string(n_) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

std::optional<int> Hypergraph::uniformity() const {
    if (edges_.empty()) return std::nullopt;
    const auto s = edges_.front().size();
    for (const auto& e : edges_) {
        if (e.size() != s) return std::nullopt;
    }
    return static_cast<int>(s);
}

ColorCheck color_check(const Hypergraph& h, int k, const Coloring& c) {
    if (static_cast<int>(c.size()) != h.n()) throw std::invalid_argument("coloring length differs from n");
    for (int x : c) {
        if (x < 0 || x >= k) {
            throw std::invalid_argument("color " + std::to_string(x) + " outside [0," + std::to_string(k) + ")");
        }
    }
    ColorCheck out;
    std::vector<int> count(static_cast<std::size_t>(k));
    for (const auto& e : h.edges()) {
        std::fill(count.begin(), count.end(), 0);
        for (Vertex v : e) ++count[c[v]];
        const int distinct = static_cast<int>(std::count_if(count.begin(), count.end(), [](int x) { return x > 0; }));
        out.balance = std::max(out.balance, *std::max_element(count.begin(), count.end()));
        if (distinct < 2) out.proper = false;
        if (distinct < k) out.rainbow = false;
    }
    return out;
}

std::optional<Coloring> solve_coloring(const Hypergraph& h, int k, ColoringGoal goal, const SearchCaps& caps) {
    if (goal.mode == ColoringMode::TwoColor) {
        k = 2;
        goal.mode = ColoringMode::Proper;
    }
    if (k < 1) throw std::invalid_argument("solve_coloring: k must be positive");
    const int n = h.n();
    const auto& edges = h.edges();
    if (goal.mode == ColoringMode::Rainbow &&
        std::any_of(edges.begin(), edges.end(), [&](const auto& e) { return static_cast<int>(e.size()) < k; })) {
        return std::nullopt;
    }

    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (Vertex v : edges[e]) incident[v].push_back(static_cast<int>(e));
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return incident[a].size() > incident[b].size(); });

    const auto ku = static_cast<std::size_t>(k);
    std::vector<int> count(edges.size() * ku, 0);
    std::vector<int> assigned(edges.size(), 0);
    std::vector<int> distinct(edges.size(), 0);
    Coloring color(static_cast<std::size_t>(n), 0);
    std::uint64_t nodes = 0;

    auto allowed = [&](Vertex v, int c) {
        for (int e : incident[v]) {
            const int size = static_cast<int>(edges[e].size());
            const int cnt = count[e * ku + c];
            switch (goal.mode) {
                case ColoringMode::Proper:
                    if (cnt + 1 == size) return false;
                    break;
                case ColoringMode::Balanced:
                    if (cnt + 1 > goal.balance) return false;
                    break;
                case ColoringMode::Rainbow: {
                    const int seen = distinct[e] + (cnt == 0 ? 1 : 0);
                    if (size - assigned[e] - 1 < k - seen) return false;
                    break;
                }
                case ColoringMode::TwoColor:
                    break;
            }
        }
        return true;
    };
    auto apply = [&](Vertex v, int c, int delta) {
        for (int e : incident[v]) {
            int& cnt = count[e * ku + c];
            if (delta > 0 && cnt == 0) ++distinct[e];
            cnt += delta;
            if (delta < 0 && cnt == 0) --distinct[e];
            assigned[e] += delta;
        }
    };

    // Colors enter in order of first use, so only one representative of each
    // relabeling class is visited.
    std::function<bool(std::size_t, int)> rec = [&](std::size_t idx, int used) -> bool {
        if (idx == order.size()) return true;
        const Vertex v = order[idx];
        const int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if (++nodes > caps.coloring_nodes) {
                throw CapExceeded("solve_coloring: node budget " + std::to_string(caps.coloring_nodes) + " exhausted");
            }
            if (!allowed(v, c)) continue;
            color[v] = c;
            apply(v, c, +1);
            if (rec(idx + 1, std::max(used, c + 1))) return true;
            apply(v, c, -1);
        }
        return false;
    };
    if (!rec(0, 0)) return std::nullopt;
    return color;
}

Cube::Cube(int k, int n, std::uint64_t max_vertices) : k_(k), n_(n) {
    if (k < 1 || n < 0) throw std::invalid_argument("cube needs k >= 1 and n >= 0");
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) {
        s *= static_cast<std::uint64_t>(k);
        if (s > max_vertices || s > static_cast<std::uint64_t>(INT32_MAX)) {
            throw CapExceeded("[" + std::to_string(k) + "]^" + std::to_string(n) + " exceeds cap of " +
                              std::to_string(max_vertices) + " vertices");
        }
    }
    size_ = static_cast<int>(s);
    stride_.assign(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * k;
}

std::vector<int> Cube::decode(int index) const {
    std::vector<int> x(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) x[i] = coord(index, i);
    return x;
}

int Cube::encode(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("cube vector has wrong length");
    int idx = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] < 0 || x[i] >= k_) throw std::invalid_argument("cube coordinate out of range");
        idx += x[i] * stride_[i];
    }
    return idx;
}

int Cube::coord(int index, int i) const { return (index / stride_[i]) % k_; }

Hypergraph gen_H_r_n_k(int k, int n, int r, const SearchCaps& caps) {
    if (r < 0) throw std::invalid_argument("gen_H_r_n_k: r must be nonnegative");
    if (k > 31) throw std::invalid_argument("gen_H_r_n_k: k must be at most 31");
    const Cube cube(k, n, caps.cube_vertices);
    std::vector<Hyperedge> edges;
    std::vector<Vertex> chosen;
    std::vector<std::uint32_t> present(static_cast<std::size_t>(n), 0);

    std::function<void(int)> rec = [&](int start) {
        const int remaining = k - static_cast<int>(chosen.size());
        int missing = 0;
        for (int i = 0; i < n; ++i) missing += std::max(0, k - std::popcount(present[i]) - remaining);
        if (missing > r) return;
        if (remaining == 0) {
            if (edges.size() >= caps.emitted_edges) {
                throw CapExceeded("gen_H_r_n_k: more than " + std::to_string(caps.emitted_edges) + " edges");
            }
            edges.push_back(chosen);
            return;
        }
        for (int x = start; x <= cube.size() - remaining; ++x) {
            const auto saved = present;
            for (int i = 0; i < n; ++i) present[i] |= 1u << cube.coord(x, i);
            chosen.push_back(x);
            rec(x + 1);
            chosen.pop_back();
            present = saved;
        }
    };
    rec(0);
    return Hypergraph(cube.size(), std::move(edges));
}

void TruthTableFn::validate() const {
    const Cube cube(k, n, UINT64_MAX);
    if (static_cast<int>(table.size()) != cube.size()) {
        throw std::invalid_argument("truth table has " + std::to_string(table.size()) + " entries, expected " +
                                    std::to_string(cube.size()));
    }
    for (auto v : table) {
        if (v > 1) throw std::invalid_argument("truth table value outside {0,1}");
    }
}

GadgetReport gadget_check(const TruthTableFn& f, const SearchCaps& caps) {
    if (f.k < 1 || f.k > 31) throw std::invalid_argument("gadget_check: k must lie in [1,31]");
    const Cube cube(f.k, f.n, caps.cube_vertices);
    f.validate();
    const int k = f.k;
    const int n = f.n;
    std::uint64_t nodes = 0;
    GadgetReport out;

    // Cover every (coordinate, value) pair with at most 2k inputs of value b.
    // Each input covers one value per coordinate, so a coordinate missing m
    // values needs m more inputs.
    auto find_cover = [&](std::uint8_t b) -> std::optional<std::vector<int>> {
        std::vector<int> pool;
        for (int x = 0; x < cube.size(); ++x) {
            if (f.table[x] == b) pool.push_back(x);
        }
        if (pool.empty()) return std::nullopt;
        std::vector<std::uint32_t> covered(static_cast<std::size_t>(n), 0);
        std::vector<int> picked;
        std::function<bool()> rec = [&]() -> bool {
            if (++nodes > caps.gadget_nodes) {
                throw CapExceeded("gadget_check: node budget " + std::to_string(caps.gadget_nodes) + " exhausted");
            }
            int worst = 0;
            int coord = -1;
            for (int i = 0; i < n; ++i) {
                const int missing = k - std::popcount(covered[i]);
                if (missing > worst) worst = missing;
                if (missing > 0 && coord < 0) coord = i;
            }
            if (coord < 0) return true;
            if (worst > 2 * k - static_cast<int>(picked.size())) return false;
            const int value = std::countr_one(covered[coord]);
            for (int x : pool) {
                if (cube.coord(x, coord) != value) continue;
                const auto saved = covered;
                for (int i = 0; i < n; ++i) covered[i] |= 1u << cube.coord(x, i);
                picked.push_back(x);
                if (rec()) return true;
                picked.pop_back();
                covered = saved;
            }
            return false;
        };
        if (!rec()) return std::nullopt;
        if (picked.empty()) picked.push_back(pool.front());
        return picked;
    };

    out.two_coloring_property = true;
    for (std::uint8_t b = 0; b <= 1; ++b) {
        if (auto cover = find_cover(b)) {
            out.two_coloring_property = false;
            out.monochromatic_cover = std::move(*cover);
            break;
        }
    }

    // constant[l][a] = 0/1 if f is constant on {x_l = a}, else -1
    for (int l = 0; l < n && !out.one_fixing; ++l) {
        std::vector<int> constant(static_cast<std::size_t>(k), -2);
        for (int x = 0; x < cube.size(); ++x) {
            int& c = constant[cube.coord(x, l)];
            const int v = f.table[x];
            if (c == -2) c = v;
            else if (c != v) c = -1;
        }
        for (int a = 0; a < k && !out.one_fixing; ++a) {
            if (constant[a] != 0) continue;
            for (int b = 0; b < k; ++b) {
                if (constant[b] == 1) {
                    out.one_fixing = true;
                    out.witness = OneFixingWitness{l, a, b};
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace vecpack
