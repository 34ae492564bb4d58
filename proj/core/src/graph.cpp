#include "vecpack/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "vecpack/errors.hpp"

namespace vecpack {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside vertex range");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_.at(static_cast<std::size_t>(u));
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::uint64_t> Graph::masks() const {
    if (n_ > 64) throw std::invalid_argument("graph has more than 64 vertices");
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        m[u] |= std::uint64_t{1} << v;
        m[v] |= std::uint64_t{1} << u;
    }
    return m;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
        }
    }
    return Graph(g.n(), std::move(e));
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.n()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const auto& e) { return c[e.first] == c[e.second]; });
}

namespace {

using Mask = std::uint64_t;

int lowest(Mask m) { return std::countr_zero(m); }

// Largest clique inside `within`; returns its mask.
Mask clique_in(const std::vector<Mask>& adj, Mask within) {
    Mask best = 0;
    int best_size = 0;
    std::function<void(Mask, int, Mask)> expand = [&](Mask r, int size, Mask p) {
        if (p == 0) {
            if (size > best_size) {
                best_size = size;
                best = r;
            }
            return;
        }
        while (p != 0) {
            if (size + std::popcount(p) <= best_size) return;
            const int v = lowest(p);
            expand(r | (Mask{1} << v), size + 1, p & adj[v]);
            p &= ~(Mask{1} << v);
        }
    };
    expand(0, 0, within);
    return best;
}

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

std::vector<Vertex> to_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m != 0) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace

std::vector<Vertex> max_clique(const Graph& g) {
    const auto adj = g.masks();
    return to_vertices(clique_in(adj, all_vertices(g.n())));
}

std::optional<Coloring> k_colorable(const Graph& g, int k, const SearchCaps& caps) {
    if (k < 1) throw std::invalid_argument("k_colorable: k must be positive");
    if (g.n() > caps.graph_vertices) {
        throw CapExceeded("k_colorable: " + std::to_string(g.n()) + " vertices exceeds cap " +
                          std::to_string(caps.graph_vertices));
    }
    const int n = g.n();
    if (n == 0) return Coloring{};
    const auto adj = g.masks();
    const auto clique = to_vertices(clique_in(adj, all_vertices(n)));
    if (static_cast<int>(clique.size()) > k) return std::nullopt;

    Coloring color(static_cast<std::size_t>(n), -1);
    std::vector<Mask> class_mask(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < clique.size(); ++i) {
        color[clique[i]] = static_cast<int>(i);
        class_mask[i] |= Mask{1} << clique[i];
    }
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v) {
        if (color[v] < 0) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });

    std::function<bool(std::size_t, int)> place = [&](std::size_t idx, int used) -> bool {
        if (idx == order.size()) return true;
        const Vertex v = order[idx];
        const int limit = std::min(k - 1, used);  // colors >= used are interchangeable
        for (int c = 0; c <= limit; ++c) {
            if (class_mask[c] & adj[v]) continue;
            color[v] = c;
            class_mask[c] |= Mask{1} << v;
            if (place(idx + 1, std::max(used, c + 1))) return true;
            class_mask[c] &= ~(Mask{1} << v);
        }
        color[v] = -1;
        return false;
    };
    if (!place(0, static_cast<int>(clique.size()))) return std::nullopt;
    return color;
}

GraphInvariants invariants(const Graph& g, const SearchCaps& caps) {
    if (g.n() > caps.graph_vertices) {
        throw CapExceeded("invariants: " + std::to_string(g.n()) + " vertices exceeds cap " +
                          std::to_string(caps.graph_vertices));
    }
    GraphInvariants inv;
    inv.max_clique = max_clique(g);
    inv.max_independent_set = max_clique(complement(g));
    inv.omega = static_cast<int>(inv.max_clique.size());
    inv.alpha = static_cast<int>(inv.max_independent_set.size());
    for (int k = std::max(inv.omega, 1); g.n() > 0; ++k) {
        if (auto c = k_colorable(g, k, caps)) {
            inv.chi = k;
            inv.optimal_coloring = std::move(*c);
            break;
        }
    }
    mpz_class bound;
    mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(inv.alpha + inv.omega),
                 static_cast<unsigned long>(inv.omega));
    inv.ramsey_ok = mpz_class(g.n()) < bound;
    return inv;
}

Graph lex_product(const Graph& g, const Graph& h) {
    const int nh = h.n();
    std::vector<std::pair<Vertex, Vertex>> e;
    e.reserve(g.edges().size() * static_cast<std::size_t>(nh) * static_cast<std::size_t>(nh) +
              static_cast<std::size_t>(g.n()) * h.edges().size());
    for (const auto& [u1, u2] : g.edges()) {
        for (Vertex v1 = 0; v1 < nh; ++v1) {
            for (Vertex v2 = 0; v2 < nh; ++v2) e.emplace_back(u1 * nh + v1, u2 * nh + v2);
        }
    }
    for (Vertex u = 0; u < g.n(); ++u) {
        for (const auto& [v1, v2] : h.edges()) e.emplace_back(u * nh + v1, u * nh + v2);
    }
    return Graph(g.n() * nh, std::move(e));
}

bool is_power_of_two(long p) { return p >= 1 && (p & (p - 1)) == 0; }

Graph lex_power(const Graph& g, int p) {
    if (p < 2 || !is_power_of_two(p)) {
        throw std::invalid_argument("lex_power: exponent " + std::to_string(p) +
                                    " is not a power of 2 >= 2");
    }
    Graph out = g;
    for (int q = 1; q < p; q *= 2) out = lex_product(out, out);
    return out;
}

Coloring lex_product_coloring(const Coloring& cg, const Coloring& ch, int k_h) {
    Coloring out;
    out.reserve(cg.size() * ch.size());
    for (int a : cg) {
        for (int b : ch) out.push_back(a * k_h + b);
    }
    return out;
}

int max_mono_clique(const Graph& g, int k, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.n()) throw std::invalid_argument("coloring length differs from n");
    std::vector<Mask> classes(static_cast<std::size_t>(k), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (c[v] < 0 || c[v] >= k) {
            throw std::invalid_argument("color " + std::to_string(c[v]) + " outside [0," +
                                        std::to_string(k) + ")");
        }
        classes[c[v]] |= Mask{1} << v;
    }
    const auto adj = g.masks();
    int best = 0;
    for (Mask m : classes) best = std::max(best, std::popcount(clique_in(adj, m)));
    return best;
}

MonoCliqueResult minimax_mono_clique(const Graph& g, int k, const SearchCaps& caps) {
    if (k < 1) throw std::invalid_argument("minimax_mono_clique: k must be positive");
    if (g.n() > caps.mono_vertices || k > caps.mono_colors) {
        throw CapExceeded("minimax_mono_clique: n=" + std::to_string(g.n()) + ", k=" +
                          std::to_string(k) + " exceeds cap (n <= " +
                          std::to_string(caps.mono_vertices) +
                          ", k <= " + std::to_string(caps.mono_colors) + ")");
    }
    const int n = g.n();
    MonoCliqueResult out;
    if (n == 0) return out;
    const auto adj = g.masks();
    const int omega = std::popcount(clique_in(adj, all_vertices(n)));
    const int floor_value = (omega + k - 1) / k;  // some color holds ceil(omega/k) of a max clique

    out.value = n + 1;
    Coloring color(static_cast<std::size_t>(n), -1);
    std::vector<Mask> classes(static_cast<std::size_t>(k), 0);
    bool done = false;
    // Colors are introduced in order of first use, which removes the k!
    // relabelings without changing the optimum.
    std::function<void(int, int, int)> rec = [&](Vertex v, int used, int current) {
        if (done) return;
        if (v == n) {
            out.value = current;
            out.best_coloring = color;
            if (current <= floor_value) done = true;
            return;
        }
        const int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit && !done; ++c) {
            const int through_v = 1 + std::popcount(clique_in(adj, classes[c] & adj[v]));
            const int next = std::max(current, through_v);
            if (next >= out.value) continue;
            color[v] = c;
            classes[c] |= Mask{1} << v;
            rec(v + 1, std::max(used, c + 1), next);
            classes[c] &= ~(Mask{1} << v);
            color[v] = -1;
        }
    };
    rec(0, 0, 0);
    return out;
}

std::optional<Coloring> trivial_mc_decision(int n, int k, int b) {
    if (k < 1 || b < 1) throw std::invalid_argument("trivial_mc_decision: k and B must be positive");
    if (static_cast<long>(k) * (b - 1) < n) return std::nullopt;
    Coloring c(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) c[i] = i % k;
    return c;
}

std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int b, const SearchCaps& caps) {
    if (b < 1) throw std::invalid_argument("cliques_of_size: size must be positive");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> current;
    std::function<void(Vertex)> rec = [&](Vertex start) {
        if (static_cast<int>(current.size()) == b) {
            if (out.size() >= caps.cliques) {
                throw CapExceeded("cliques_of_size: more than " + std::to_string(caps.cliques) + " cliques");
            }
            out.push_back(current);
            return;
        }
        for (Vertex v = start; v < g.n(); ++v) {
            if (std::all_of(current.begin(), current.end(), [&](Vertex w) { return g.adjacent(v, w); })) {
                current.push_back(v);
                rec(v + 1);
                current.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

}  // namespace vecpack
