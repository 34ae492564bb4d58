#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace vecpack::oracle {
namespace {

// Calls fn(part_of, parts) for every set partition of {0..n-1}, as
// restricted growth strings.
void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> part(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int parts) {
        if (i == n) {
            fn(part, parts);
            return;
        }
        for (int p = 0; p <= parts; ++p) {
            part[static_cast<std::size_t>(i)] = p;
            rec(i + 1, std::max(parts, p + 1));
        }
    };
    rec(0, 0);
}

std::vector<std::vector<Rational>> part_loads(const PackingInstance& instance, const std::vector<int>& part,
                                              int parts) {
    std::vector<std::vector<Rational>> loads(static_cast<std::size_t>(parts),
                                             std::vector<Rational>(instance.dim()));
    for (std::size_t i = 0; i < instance.size(); ++i) {
        for (std::size_t c = 0; c < instance.dim(); ++c) {
            loads[static_cast<std::size_t>(part[i])][c] += instance.job(i).coords[c];
        }
    }
    return loads;
}

}  // namespace

int vbp(const PackingInstance& instance) {
    const int n = static_cast<int>(instance.size());
    int best = n;
    for_each_partition(n, [&](const std::vector<int>& part, int parts) {
        if (parts >= best) return;
        for (const auto& load : part_loads(instance, part, parts)) {
            for (const auto& x : load) {
                if (x > Rational(1)) return;
            }
        }
        best = parts;
    });
    return best;
}

Rational vs(const PackingInstance& instance) {
    const int m = instance.machines().value_or(1);
    const int n = static_cast<int>(instance.size());
    std::optional<Rational> best;
    std::vector<int> machine(static_cast<std::size_t>(n), 0);
    while (true) {
        Rational worst(0);
        for (const auto& load : part_loads(instance, machine, m)) {
            for (const auto& x : load) worst = std::max(worst, x);
        }
        if (!best || worst < *best) best = worst;
        int i = 0;
        while (i < n && ++machine[static_cast<std::size_t>(i)] == m) machine[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return *best;
}

int vbc(const PackingInstance& instance) {
    int best = 0;
    for_each_partition(static_cast<int>(instance.size()), [&](const std::vector<int>& part, int parts) {
        if (parts <= best) return;
        for (const auto& load : part_loads(instance, part, parts)) {
            for (const auto& x : load) {
                if (x < Rational(1)) return;
            }
        }
        best = parts;
    });
    return best;
}

std::optional<int> setcover(const SetSystem& s) {
    const std::size_t m = s.size();
    if (m > 24) throw std::invalid_argument("oracle::setcover: too many sets");
    std::optional<int> best;
    for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
        const int count = std::popcount(pick);
        if (best && count >= *best) continue;
        std::vector<bool> hit(static_cast<std::size_t>(s.universe_size()), false);
        for (std::size_t j = 0; j < m; ++j) {
            if ((pick >> j) & 1u) {
                for (Element e : s.sets()[j]) hit[static_cast<std::size_t>(e)] = true;
            }
        }
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) best = count;
    }
    return best;
}

bool satisfiable(const Cnf& formula) {
    const int n = formula.variables;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        bool all = true;
        for (const auto& clause : formula.clauses) {
            bool any = false;
            for (const auto& lit : clause) {
                const bool value = (a >> lit.var) & 1u;
                any = any || value != lit.negated;
            }
            all = all && any;
            if (!all) break;
        }
        if (all) return true;
    }
    return false;
}

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    }
    return true;
}

int clique_number_within(const Graph& g, const std::vector<Vertex>& pool) {
    int best = 0;
    const std::size_t m = pool.size();
    for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
        const int size = std::popcount(pick);
        if (size <= best) continue;
        std::vector<Vertex> vs;
        for (std::size_t j = 0; j < m; ++j) {
            if ((pick >> j) & 1u) vs.push_back(pool[j]);
        }
        if (is_clique(g, vs)) best = size;
    }
    return best;
}

// Calls fn on every k-coloring of n vertices; stops when fn returns true.
bool any_coloring(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
        if (fn(c)) return true;
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return false;
    }
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.n() > 20) throw std::invalid_argument("oracle::clique_number: too many vertices");
    std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    return clique_number_within(g, all);
}

int chromatic_number(const Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k) {
        const bool ok = any_coloring(g.n(), k, [&](const std::vector<int>& c) {
            for (const auto& [u, v] : g.edges()) {
                if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
            }
            return true;
        });
        if (ok) return k;
    }
}

int minimax_mono_clique(const Graph& g, int k) {
    int best = g.n();
    any_coloring(g.n(), k, [&](const std::vector<int>& c) {
        int worst = 0;
        for (int color = 0; color < k; ++color) {
            std::vector<Vertex> pool;
            for (int v = 0; v < g.n(); ++v) {
                if (c[static_cast<std::size_t>(v)] == color) pool.push_back(v);
            }
            worst = std::max(worst, clique_number_within(g, pool));
        }
        best = std::min(best, worst);
        return false;
    });
    return best;
}

bool lc_constraint_holds(const LabelCover& lc, int k, int cloud_size, const std::vector<int>& edge) {
    const int n = lc.sigma_left();
    if (static_cast<int>(edge.size()) != k * k) return false;
    auto digit = [&](int x, int i) {
        for (int t = n - 1; t > i; --t) x /= k;
        return x % k;
    };

    std::map<int, std::vector<int>> clouds;  // left vertex -> vectors
    for (int node : edge) clouds[node / cloud_size].push_back(node % cloud_size);
    if (static_cast<int>(clouds.size()) != k) return false;
    std::vector<int> owners;
    std::vector<std::vector<int>> vectors;
    for (auto& [v, xs] : clouds) {
        std::sort(xs.begin(), xs.end());
        if (static_cast<int>(xs.size()) != k || std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return false;
        owners.push_back(v);
        vectors.push_back(xs);
    }

    // Per-color bound for one choice of projections pi_1..pi_k.
    auto bound_holds = [&](const std::vector<const std::vector<Label>*>& pis) {
        for (int beta = 0; beta < lc.sigma_right(); ++beta) {
            std::vector<std::vector<int>> pre(static_cast<std::size_t>(k));
            bool reachable = true;
            for (int i = 0; i < k && reachable; ++i) {
                for (int a = 0; a < n; ++a) {
                    if ((*pis[static_cast<std::size_t>(i)])[static_cast<std::size_t>(a)] == beta) {
                        pre[static_cast<std::size_t>(i)].push_back(a);
                    }
                }
                reachable = !pre[static_cast<std::size_t>(i)].empty();
            }
            if (reachable) {
                std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
                while (true) {
                    std::vector<int> count(static_cast<std::size_t>(k), 0);
                    for (int i = 0; i < k; ++i) {
                        const int alpha = pre[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
                        for (int x : vectors[static_cast<std::size_t>(i)]) ++count[static_cast<std::size_t>(digit(x, alpha))];
                    }
                    for (int c : count) {
                        if (c > 2 * k) return false;
                    }
                    int i = 0;
                    while (i < k && ++pos[static_cast<std::size_t>(i)] == pre[static_cast<std::size_t>(i)].size()) {
                        pos[static_cast<std::size_t>(i++)] = 0;
                    }
                    if (i == k) break;
                }
            }
        }
        return true;
    };

    for (int u = 0; u < lc.right(); ++u) {
        std::vector<std::vector<const std::vector<Label>*>> options(static_cast<std::size_t>(k));
        bool adjacent = true;
        for (int i = 0; i < k && adjacent; ++i) {
            for (const auto& e : lc.edges()) {
                if (e.v == u && e.u == owners[static_cast<std::size_t>(i)]) options[static_cast<std::size_t>(i)].push_back(&e.pi);
            }
            adjacent = !options[static_cast<std::size_t>(i)].empty();
        }
        if (!adjacent) continue;
        std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
        while (true) {
            std::vector<const std::vector<Label>*> pis(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) pis[static_cast<std::size_t>(i)] = options[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
            if (bound_holds(pis)) return true;
            int i = 0;
            while (i < k && ++pos[static_cast<std::size_t>(i)] == options[static_cast<std::size_t>(i)].size()) {
                pos[static_cast<std::size_t>(i++)] = 0;
            }
            if (i == k) break;
        }
    }
    return false;
}

}  // namespace vecpack::oracle
