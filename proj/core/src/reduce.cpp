#include "vecpack/reduce.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "union_find.hpp"
#include "vecpack/errors.hpp"
#include "vecpack/solve.hpp"

namespace vecpack {

namespace {

std::string num(long v) { return std::to_string(v); }

Assignment coloring_to_assignment(const Coloring& c, int parts) { return Assignment{c, parts}; }

// 0/1 incidence jobs: one per vertex, one coordinate per edge.
IncidenceInstance incidence(const Hypergraph& h, ProblemKind kind, std::optional<int> machines) {
    const std::size_t d = std::max<std::size_t>(h.size(), 1);
    std::vector<VectorJob> jobs(static_cast<std::size_t>(h.n()), VectorJob{std::vector<Rational>(d, Rational(0))});
    for (std::size_t j = 0; j < h.size(); ++j) {
        for (Vertex v : h.edges()[j]) jobs[v].coords[j] = Rational(1);
    }
    return {PackingInstance(kind, d, std::move(jobs), machines), h.size() == 0};
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > cap) return cap + 1;
    }
    return out;
}

void count_candidate(std::uint64_t& counter, const SearchCaps& caps, const char* who) {
    if (++counter > caps.construction_nodes) {
        throw CapExceeded(std::string(who) + ": more than " + std::to_string(caps.construction_nodes) +
                          " candidates examined");
    }
}

void check_edge_cap(std::size_t count, const SearchCaps& caps, const char* who) {
    if (count > caps.emitted_edges) {
        throw CapExceeded(std::string(who) + ": more than " + std::to_string(caps.emitted_edges) + " edges");
    }
}

}  // namespace

// ---- set cover -> vector bin packing -------------------------------------

SetCoverToVbp setcover_to_vbp(const SetSystem& s) {
    auto full = full_embedding(s);
    std::vector<VectorJob> jobs;
    jobs.reserve(full.embedding.elements());
    for (const auto& row : full.embedding.rows()) jobs.push_back(VectorJob{row});
    PackingInstance inst(ProblemKind::VBP, full.embedding.dim(), std::move(jobs));
    return {std::move(inst), std::move(full)};
}

GapCertificate certify_setcover_to_vbp(const SetSystem& s, const SetCoverToVbp& r, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "setcover_to_vbp";
    cert.parameters["universe"] = num(s.universe_size());
    cert.parameters["sets"] = num(static_cast<long>(s.size()));
    cert.parameters["k"] = num(r.embedding.k);
    cert.parameters["delta"] = num(r.embedding.delta);
    cert.parameters["parts"] = num(r.embedding.decomposition.colors_used);
    cert.parameters["dim"] = num(static_cast<long>(r.instance.dim()));

    solve::SolveResult cover;
    bool cover_exact = true;
    try {
        cover = solve::setcover(s, solve::CoverMode::Exact, caps);
    } catch (const CapExceeded&) {
        cover = solve::setcover(s, solve::CoverMode::Greedy, caps);
        cover_exact = false;
    }
    cert.parameters["cover_size"] = cover.optimum.radicand.str();

    // One bin per chosen set; each element goes to the first chosen set holding it.
    Assignment a{std::vector<int>(static_cast<std::size_t>(s.universe_size()), -1),
                 static_cast<int>(cover.cover.size())};
    for (std::size_t p = 0; p < cover.cover.size(); ++p) {
        for (Element e : s.sets()[cover.cover[p]]) {
            if (a.part_of[e] < 0) a.part_of[e] = static_cast<int>(p);
        }
    }
    const auto rep = evaluate(r.instance, a);
    if (!rep.feasible) throw VerificationFailure("setcover_to_vbp: cover of size " + num(a.part_count) + " does not pack");
    cert.completeness = {true, rep.value.radicand};

    try {
        const auto bins = solve::vbp(r.instance, solve::VbpMode::Exact, caps);
        if (!evaluate(r.instance, bins.witness).feasible) throw VerificationFailure("setcover_to_vbp: VBP witness infeasible");
        cert.soundness = {cover_exact, bins.optimum.radicand};
        if (cover_exact && bins.optimum.radicand != cover.optimum.radicand) {
            throw VerificationFailure("setcover_to_vbp: VBP optimum " + bins.optimum.radicand.str() +
                                      " differs from set cover optimum " + cover.optimum.radicand.str());
        }
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- monochromatic clique -> vector scheduling ----------------------------

MonoCliqueToVs monoclique_to_vs(const Graph& g, int k, int b, const SearchCaps& caps) {
    if (b < 2) throw std::invalid_argument("monoclique_to_vs: B must be at least 2");
    if (k < 1) throw std::invalid_argument("monoclique_to_vs: k must be positive");
    auto cliques = cliques_of_size(g, b, caps);
    const std::size_t d = std::max<std::size_t>(cliques.size(), 1);
    std::vector<VectorJob> jobs(static_cast<std::size_t>(g.n()), VectorJob{std::vector<Rational>(d, Rational(0))});
    for (std::size_t j = 0; j < cliques.size(); ++j) {
        for (Vertex v : cliques[j]) jobs[v].coords[j] = Rational(1);
    }
    const bool degenerate = cliques.empty();
    return {PackingInstance(ProblemKind::VS, d, std::move(jobs), k), std::move(cliques), degenerate};
}

GapCertificate certify_monoclique_to_vs(const Graph& g, int k, int b, const MonoCliqueToVs& r, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "monoclique_to_vs";
    cert.parameters["n"] = num(g.n());
    cert.parameters["k"] = num(k);
    cert.parameters["B"] = num(b);
    cert.parameters["cliques"] = num(static_cast<long>(r.cliques.size()));
    cert.parameters["degenerate"] = r.degenerate ? "true" : "false";

    bool exhaustive = true;
    try {
        if (auto c = k_colorable(g, k, caps)) {
            const auto rep = evaluate(r.instance, coloring_to_assignment(*c, k));
            if (rep.value.radicand > Rational(1)) {
                throw VerificationFailure("monoclique_to_vs: proper " + num(k) + "-coloring has makespan " +
                                          rep.value.radicand.str());
            }
            cert.completeness = {true, rep.value.radicand};
        }
    } catch (const CapExceeded& e) {
        cert.parameters["completeness_cap"] = e.what();
    }

    std::optional<int> mono;
    try {
        mono = minimax_mono_clique(g, k, caps).value;
        cert.parameters["minimax_mono_clique"] = num(*mono);
    } catch (const CapExceeded& e) {
        exhaustive = false;
        cert.parameters["soundness_cap"] = e.what();
    }
    try {
        const auto best = solve::vs(r.instance, solve::VsMode::Exact, Norm::infinity(), caps);
        const Rational makespan = best.optimum.radicand;
        if (evaluate(r.instance, best.witness).value.radicand != makespan) {
            throw VerificationFailure("monoclique_to_vs: VS witness does not reproduce its value");
        }
        if (mono && *mono >= b && makespan < Rational(b)) {
            throw VerificationFailure("monoclique_to_vs: every coloring has a monochromatic " + num(b) +
                                      "-clique but makespan is " + makespan.str());
        }
        cert.soundness = {exhaustive, makespan};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- lexicographic amplification ------------------------------------------

Graph lex_amplify(const Graph& g, int c, const SearchCaps& caps) {
    if (c < 2 || !is_power_of_two(c)) {
        throw std::invalid_argument("lex_amplify: C = " + num(c) + " is not a power of 2 >= 2");
    }
    long size = 1;
    for (int i = 0; i < c; ++i) {
        size *= g.n();
        if (size > caps.product_vertices) {
            throw CapExceeded("lex_amplify: " + num(g.n()) + "^" + num(c) + " vertices exceeds cap " +
                              num(caps.product_vertices));
        }
    }
    return lex_power(g, c);
}

GapCertificate certify_lex_amplify(const Graph& g, int c, int k, const Graph& amplified, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "lex_amplify";
    cert.parameters["n"] = num(g.n());
    cert.parameters["C"] = num(c);
    cert.parameters["k"] = num(k);
    cert.parameters["amplified_n"] = num(amplified.n());

    try {
        const auto inv = invariants(g, caps);
        cert.parameters["chi"] = num(inv.chi);
        // Follow the squaring that built G^C: G^{2q} = G^q . G^q.
        Coloring col = inv.optimal_coloring;
        long colors = inv.chi;
        for (int q = 1; q < c; q *= 2) {
            col = lex_product_coloring(col, col, static_cast<int>(colors));
            colors *= colors;
        }
        if (!is_proper_coloring(amplified, col)) {
            throw VerificationFailure("lex_amplify: product coloring is not proper");
        }
        cert.completeness = {true, Rational(colors)};
        if (amplified.n() <= caps.graph_vertices) {
            const int chi_amp = invariants(amplified, caps).chi;
            cert.parameters["chi_amplified"] = num(chi_amp);
            if (chi_amp > colors) throw VerificationFailure("lex_amplify: chromatic number above chi^C");
        }
    } catch (const CapExceeded& e) {
        cert.parameters["completeness_cap"] = e.what();
    }

    try {
        const int m = minimax_mono_clique(g, k, caps).value;
        const int m_amp = minimax_mono_clique(amplified, k, caps).value;
        long power = 1;
        for (int i = 0; i < c; ++i) power *= m;
        cert.parameters["mono"] = num(m);
        cert.parameters["mono_amplified"] = num(m_amp);
        if (m_amp < power) {
            throw VerificationFailure("lex_amplify: m(G^C,k) = " + num(m_amp) + " < m(G,k)^C = " + num(power));
        }
        cert.soundness = {true, Rational(m_amp)};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- balanced hypergraph coloring -> vector scheduling ---------------------

IncidenceInstance bhc_to_vs(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("bhc_to_vs: k must be positive");
    return incidence(h, ProblemKind::VS, k);
}

GapCertificate certify_bhc_to_vs(const Hypergraph& h, int k, const IncidenceInstance& r, std::optional<int> balance,
                                 const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "bhc_to_vs";
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    std::size_t largest = 0;
    for (const auto& e : h.edges()) {
        smallest = std::min(smallest, e.size());
        largest = std::max(largest, e.size());
    }
    const int c = balance.value_or(static_cast<int>((largest + static_cast<std::size_t>(k) - 1) / static_cast<std::size_t>(k)));
    cert.parameters["k"] = num(k);
    cert.parameters["balance"] = num(c);
    if (auto s = h.uniformity()) cert.parameters["uniformity"] = num(*s);

    try {
        if (auto col = solve_coloring(h, k, ColoringGoal::balanced(c), caps)) {
            const auto rep = evaluate(r.instance, coloring_to_assignment(*col, k));
            if (rep.value.radicand > Rational(c)) {
                throw VerificationFailure("bhc_to_vs: balanced coloring gives makespan " + rep.value.radicand.str());
            }
            cert.completeness = {true, rep.value.radicand};
        }
    } catch (const CapExceeded& e) {
        cert.parameters["completeness_cap"] = e.what();
    }

    try {
        const bool proper = solve_coloring(h, k, ColoringGoal::proper(), caps).has_value();
        cert.parameters["properly_colorable"] = proper ? "true" : "false";
        const auto best = solve::vs(r.instance, solve::VsMode::Exact, Norm::infinity(), caps);
        const Rational makespan = best.optimum.radicand;
        if (!proper && !h.edges().empty() && makespan < Rational(static_cast<std::int64_t>(smallest))) {
            throw VerificationFailure("bhc_to_vs: no proper coloring yet makespan " + makespan.str() +
                                      " is below the smallest edge size");
        }
        if (cert.completeness.witness_present && makespan > cert.completeness.achieved_value) {
            throw VerificationFailure("bhc_to_vs: exact makespan exceeds a witnessed assignment");
        }
        cert.soundness = {true, makespan};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- label cover -> balanced hypergraph coloring ---------------------------

bool is_odd_prime(int k) {
    if (k < 3 || k % 2 == 0) return false;
    for (int d = 3; d * d <= k; d += 2) {
        if (k % d == 0) return false;
    }
    return true;
}

namespace {

// All k-subsets of {0..q-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int q, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= q - (k - static_cast<int>(cur.size())); ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

LabelCoverToBhc labelcover_to_bhc(const LabelCover& lc, int k, const SearchCaps& caps) {
    if (!is_odd_prime(k)) throw std::invalid_argument("labelcover_to_bhc: k = " + num(k) + " is not an odd prime");
    const int n = lc.sigma_left();
    const int nr = lc.sigma_right();
    const Cube cube(k, n, caps.cube_vertices);
    const int q = cube.size();
    if (static_cast<long>(lc.left()) * q > std::numeric_limits<int>::max()) {
        throw CapExceeded("labelcover_to_bhc: vertex count overflows");
    }
    if (binomial_capped(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k), caps.construction_nodes) >
        caps.construction_nodes) {
        throw CapExceeded("labelcover_to_bhc: C(" + num(q) + "," + num(k) + ") vector sets exceed cap");
    }

    // cnt[s][a * k + p] = number of vectors in subset s whose coordinate a is p
    const auto subsets = k_subsets(q, k);
    const auto ku = static_cast<std::size_t>(k);
    std::vector<std::vector<int>> cnt(subsets.size(), std::vector<int>(static_cast<std::size_t>(n) * ku, 0));
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (int x : subsets[s]) {
            for (int a = 0; a < n; ++a) ++cnt[s][static_cast<std::size_t>(a) * ku + static_cast<std::size_t>(cube.coord(x, a))];
        }
    }

    LabelCoverToBhc out;
    out.k = k;
    out.cloud_size = q;
    std::vector<Hyperedge> edges;
    const auto right_inc = lc.right_incidence();
    const int limit = 2 * k;

    for (int u = 0; u < lc.right(); ++u) {
        const auto& inc = right_inc[u];
        std::vector<int> chosen;  // positions into inc
        std::function<void(std::size_t)> pick_neighbors = [&](std::size_t start) {
            if (static_cast<int>(chosen.size()) == k) {
                // pre[i][b]: labels of block i projecting to b
                std::vector<std::vector<std::vector<int>>> pre(ku, std::vector<std::vector<int>>(static_cast<std::size_t>(nr)));
                for (int i = 0; i < k; ++i) {
                    const auto& pi = lc.edges()[inc[chosen[i]]].pi;
                    for (int a = 0; a < n; ++a) pre[i][pi[a]].push_back(a);
                }
                std::vector<int> active;  // labels b with a full preimage tuple
                for (int b = 0; b < nr; ++b) {
                    bool all = true;
                    for (int i = 0; i < k; ++i) all = all && !pre[i][b].empty();
                    if (all) active.push_back(b);
                }
                // load[b][p] = sum over placed blocks of max_{a in pre_i(b)} cnt[a][p]
                std::vector<std::vector<int>> load(active.size(), std::vector<int>(ku, 0));
                std::vector<std::size_t> block(ku, 0);
                std::function<void(int)> place = [&](int i) {
                    if (i == k) {
                        Hyperedge e;
                        e.reserve(ku * ku);
                        for (int j = 0; j < k; ++j) {
                            const int v = lc.edges()[inc[chosen[j]]].u;
                            for (int x : subsets[block[j]]) e.push_back(v * q + x);
                        }
                        std::sort(e.begin(), e.end());
                        edges.push_back(std::move(e));
                        check_edge_cap(edges.size(), caps, "labelcover_to_bhc");
                        return;
                    }
                    for (std::size_t s = 0; s < subsets.size(); ++s) {
                        count_candidate(out.candidates_examined, caps, "labelcover_to_bhc");
                        bool ok = true;
                        for (std::size_t t = 0; t < active.size(); ++t) {
                            for (int p = 0; p < k; ++p) {
                                int top = 0;
                                for (int a : pre[i][active[t]]) top = std::max(top, cnt[s][static_cast<std::size_t>(a) * ku + p]);
                                load[t][p] += top;
                                if (load[t][p] > limit) ok = false;
                            }
                        }
                        if (ok) {
                            block[i] = s;
                            place(i + 1);
                        }
                        for (std::size_t t = 0; t < active.size(); ++t) {
                            for (int p = 0; p < k; ++p) {
                                int top = 0;
                                for (int a : pre[i][active[t]]) top = std::max(top, cnt[s][static_cast<std::size_t>(a) * ku + p]);
                                load[t][p] -= top;
                            }
                        }
                    }
                };
                place(0);
                return;
            }
            for (std::size_t j = start; j < inc.size(); ++j) {
                const int left = lc.edges()[inc[j]].u;
                const bool repeat = std::any_of(chosen.begin(), chosen.end(),
                                                [&](int c) { return lc.edges()[inc[c]].u == left; });
                if (repeat) continue;
                chosen.push_back(static_cast<int>(j));
                pick_neighbors(j + 1);
                chosen.pop_back();
            }
        };
        pick_neighbors(0);
    }
    out.hypergraph = Hypergraph(lc.left() * q, std::move(edges));
    return out;
}

Coloring dictator_coloring_bhc(const LabelCover& lc, const LabelCoverToBhc& r, const Labeling& sigma) {
    const Cube cube(r.k, lc.sigma_left(), std::numeric_limits<std::uint64_t>::max());
    Coloring c(static_cast<std::size_t>(r.hypergraph.n()));
    for (int id = 0; id < r.hypergraph.n(); ++id) {
        c[id] = cube.coord(id % r.cloud_size, sigma.left.at(static_cast<std::size_t>(id / r.cloud_size)));
    }
    return c;
}

GapCertificate certify_labelcover_to_bhc(const LabelCover& lc, const LabelCoverToBhc& r, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "labelcover_to_bhc";
    cert.parameters["k"] = num(r.k);
    cert.parameters["sigma_left"] = num(lc.sigma_left());
    cert.parameters["vertices"] = num(r.hypergraph.n());
    cert.parameters["edges"] = num(static_cast<long>(r.hypergraph.size()));
    for (const auto& e : r.hypergraph.edges()) {
        if (static_cast<int>(e.size()) != r.k * r.k) throw VerificationFailure("labelcover_to_bhc: edge is not k^2-uniform");
    }
    try {
        const auto best = best_labeling(lc, caps);
        cert.parameters["label_cover_value"] = best.value.str();
        if (best.value == Rational(1)) {
            const auto check = color_check(r.hypergraph, r.k, dictator_coloring_bhc(lc, r, best.witness));
            if (check.balance > 2 * r.k) {
                throw VerificationFailure("labelcover_to_bhc: dictator coloring has balance " + num(check.balance));
            }
            cert.completeness = {true, Rational(check.balance)};
        }
    } catch (const CapExceeded& e) {
        cert.parameters["completeness_cap"] = e.what();
    }
    try {
        const auto col = solve_coloring(r.hypergraph, r.k, ColoringGoal::proper(), caps);
        if (col && !color_check(r.hypergraph, r.k, *col).proper) {
            throw VerificationFailure("labelcover_to_bhc: coloring search returned an improper coloring");
        }
        cert.soundness = {true, Rational(col ? 1 : 0)};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- label cover -> rainbow coloring ---------------------------------------

LabelCoverToRainbow labelcover_to_rainbow(const LabelCover& lc, int k, const SearchCaps& caps, RainbowEdgeRule rule) {
    if (lc.sigma_left() != lc.sigma_right()) {
        throw std::invalid_argument("labelcover_to_rainbow: needs sigma_left == sigma_right");
    }
    if (k < 3) throw std::invalid_argument("labelcover_to_rainbow: k must be at least 3");
    if (k > 31) throw std::invalid_argument("labelcover_to_rainbow: k must be at most 31");
    const int n = lc.sigma_left();
    const Cube cube(k, n, caps.cube_vertices);
    const int q = cube.size();
    const long clouds = static_cast<long>(lc.left()) + lc.right();
    if (clouds * q > std::numeric_limits<int>::max()) throw CapExceeded("labelcover_to_rainbow: node count overflows");
    const int total = static_cast<int>(clouds * q);

    // covering vector sets of one cloud
    std::uint64_t examined = 0;
    std::vector<std::vector<int>> local;
    std::vector<int> cur;
    std::vector<std::uint32_t> present(static_cast<std::size_t>(n), 0);
    const int want = 2 * k;
    std::function<void(int)> rec = [&](int start) {
        const int remaining = want - static_cast<int>(cur.size());
        bool covered = true;
        for (int i = 0; i < n; ++i) {
            const int missing = k - std::popcount(present[i]);
            if (missing > remaining) return;
            covered = covered && missing == 0;
        }
        if (covered && (remaining == 0 || (rule == RainbowEdgeRule::UpTo2k && !cur.empty()))) local.push_back(cur);
        if (remaining == 0) return;
        const int last = rule == RainbowEdgeRule::UpTo2k ? q - 1 : q - remaining;
        for (int x = start; x <= last; ++x) {
            count_candidate(examined, caps, "labelcover_to_rainbow");
            const auto saved = present;
            for (int i = 0; i < n; ++i) present[i] |= 1u << cube.coord(x, i);
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
            present = saved;
        }
    };
    rec(0);
    check_edge_cap(local.size() * static_cast<std::size_t>(clouds), caps, "labelcover_to_rainbow");

    detail::UnionFind uf(total);
    std::vector<int> y(static_cast<std::size_t>(n));
    std::vector<int> x(static_cast<std::size_t>(n));
    for (const auto& e : lc.edges()) {
        const int cu = e.u;
        const int cv = lc.left() + e.v;
        for (int yi = 0; yi < q; ++yi) {
            for (int i = 0; i < n; ++i) x[i] = cube.coord(yi, e.pi[i]);
            uf.unite(cu * q + cube.encode(x), cv * q + yi);
        }
    }

    LabelCoverToRainbow out;
    out.k = k;
    out.cloud_size = q;
    out.master_of.assign(static_cast<std::size_t>(total), -1);
    int masters = 0;
    for (int id = 0; id < total; ++id) {
        const int root = uf.find(id);
        out.master_of[id] = root == id ? masters++ : out.master_of[root];
    }

    std::vector<Hyperedge> edges;
    edges.reserve(local.size() * static_cast<std::size_t>(clouds));
    for (long w = 0; w < clouds; ++w) {
        for (const auto& s : local) {
            std::vector<Vertex> e;
            e.reserve(s.size());
            for (int xi : s) e.push_back(out.master_of[static_cast<std::size_t>(w * q + xi)]);
            edges.push_back(make_edge(std::move(e)));
        }
    }
    out.unfolded_edges = edges.size();
    out.hypergraph = Hypergraph(masters, std::move(edges));
    return out;
}

Coloring dictator_coloring_rainbow(const LabelCover& lc, const LabelCoverToRainbow& r, const Labeling& sigma) {
    const Cube cube(r.k, lc.sigma_left(), std::numeric_limits<std::uint64_t>::max());
    Coloring c(static_cast<std::size_t>(r.hypergraph.n()), -1);
    for (std::size_t id = 0; id < r.master_of.size(); ++id) {
        const int w = static_cast<int>(id) / r.cloud_size;
        const int label = w < lc.left() ? sigma.left.at(static_cast<std::size_t>(w))
                                        : sigma.right.at(static_cast<std::size_t>(w - lc.left()));
        const int color = cube.coord(static_cast<int>(id) % r.cloud_size, label);
        int& slot = c[r.master_of[id]];
        if (slot >= 0 && slot != color) {
            throw VerificationFailure("labelcover_to_rainbow: labeling violates an equality constraint");
        }
        slot = color;
    }
    return c;
}

GapCertificate certify_labelcover_to_rainbow(const LabelCover& lc, const LabelCoverToRainbow& r, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "labelcover_to_rainbow";
    cert.parameters["k"] = num(r.k);
    cert.parameters["sigma"] = num(lc.sigma_left());
    cert.parameters["masters"] = num(r.hypergraph.n());
    cert.parameters["edges"] = num(static_cast<long>(r.hypergraph.size()));
    cert.parameters["unfolded_edges"] = num(static_cast<long>(r.unfolded_edges));
    try {
        const auto best = best_labeling(lc, caps);
        cert.parameters["label_cover_value"] = best.value.str();
        if (best.value == Rational(1)) {
            const auto check = color_check(r.hypergraph, r.k, dictator_coloring_rainbow(lc, r, best.witness));
            if (!check.rainbow) throw VerificationFailure("labelcover_to_rainbow: dictator coloring is not rainbow");
            cert.completeness = {true, Rational(r.k)};
        }
    } catch (const CapExceeded& e) {
        cert.parameters["completeness_cap"] = e.what();
    }
    try {
        const auto col = solve_coloring(r.hypergraph, 2, ColoringGoal::two_color(), caps);
        if (col && !color_check(r.hypergraph, 2, *col).proper) {
            throw VerificationFailure("labelcover_to_rainbow: 2-coloring search returned an improper coloring");
        }
        cert.soundness = {true, Rational(col ? 1 : 0)};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- 3-SAT -> label cover ---------------------------------------------------

GapCertificate certify_threesat_to_labelcover(const Cnf& formula, const LabelCover& lc, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "threesat_to_labelcover";
    cert.parameters["variables"] = num(formula.variables);
    cert.parameters["clauses"] = num(static_cast<long>(formula.clauses.size()));
    try {
        const auto best = best_labeling(lc, caps);
        if (best.value == Rational(1)) {
            std::vector<bool> assignment(static_cast<std::size_t>(formula.variables));
            for (int v = 0; v < formula.variables; ++v) assignment[v] = best.witness.right.at(v) == 1;
            if (!satisfies(formula, assignment)) {
                throw VerificationFailure("threesat_to_labelcover: optimal labeling does not satisfy the formula");
            }
            cert.completeness = {true, Rational(1)};
        }
        cert.soundness = {true, best.value};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

// ---- rainbow coloring -> vector bin covering --------------------------------

PackingInstance rainbow_to_vbc(const Hypergraph& h) {
    if (h.edges().empty()) throw std::invalid_argument("rainbow_to_vbc: hypergraph has no edges");
    return incidence(h, ProblemKind::VBC, std::nullopt).instance;
}

GapCertificate certify_rainbow_to_vbc(const Hypergraph& h, int k, const PackingInstance& instance, const SearchCaps& caps) {
    GapCertificate cert;
    cert.reduction_name = "rainbow_to_vbc";
    cert.parameters["k"] = num(k);
    cert.parameters["vertices"] = num(h.n());
    cert.parameters["edges"] = num(static_cast<long>(h.size()));
    try {
        if (auto col = solve_coloring(h, k, ColoringGoal::rainbow(), caps)) {
            const auto rep = evaluate(instance, coloring_to_assignment(*col, k));
            if (!rep.feasible || rep.value.radicand != Rational(k)) {
                throw VerificationFailure("rainbow_to_vbc: rainbow coloring does not give " + num(k) + " covering parts");
            }
            cert.completeness = {true, rep.value.radicand};
        }
    } catch (const CapExceeded& e) {
        cert.parameters["completeness_cap"] = e.what();
    }
    try {
        const bool two = solve_coloring(h, 2, ColoringGoal::two_color(), caps).has_value();
        cert.parameters["two_colorable"] = two ? "true" : "false";
        const auto best = solve::vbc(instance, solve::VbcMode::Exact, caps);
        const Rational opt = best.optimum.radicand;
        if (evaluate(instance, best.witness).value.radicand != opt) {
            throw VerificationFailure("rainbow_to_vbc: VBC witness does not reproduce its value");
        }
        if (!two && opt > Rational(1)) throw VerificationFailure("rainbow_to_vbc: not 2-colorable yet optimum " + opt.str());
        if (cert.completeness.witness_present && opt < Rational(k)) {
            throw VerificationFailure("rainbow_to_vbc: rainbow colorable yet optimum " + opt.str());
        }
        cert.soundness = {true, opt};
    } catch (const CapExceeded& e) {
        cert.soundness = {false, Rational(0)};
        cert.parameters["soundness_cap"] = e.what();
    }
    return cert;
}

}  // namespace vecpack
