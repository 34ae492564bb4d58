#include "suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "oracles.hpp"
#include "vecpack/embed.hpp"
#include "vecpack/errors.hpp"
#include "vecpack/fixtures.hpp"
#include "vecpack/graph.hpp"
#include "vecpack/hypergraph.hpp"
#include "vecpack/reduce.hpp"
#include "vecpack/solve.hpp"

namespace vecpack::suite {
namespace {

using fixtures::Rng;

Rng rng_for(const Options& options, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string join(const std::vector<int>& xs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << '}';
    return os.str();
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.n() << " edges=[";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        os << (i ? " " : "") << g.edges()[i].first << '-' << g.edges()[i].second;
    }
    os << ']';
    return os.str();
}

std::string describe(const SetSystem& s) {
    std::ostringstream os;
    os << "universe=" << s.universe_size() << " sets=";
    for (const auto& set : s.sets()) os << join(set);
    return os.str();
}

Rational value_of(const solve::SolveResult& r) { return r.optimum.radicand; }

// Tracks a failure count and keeps the first counterexample.
struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first;

    void record(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first = what();
    }
    std::string line(const std::string& label) const {
        std::ostringstream os;
        os << label << ": " << checked << " checked, " << failed << " failed";
        if (failed) os << "; first: " << first;
        return os.str();
    }
};

// ---- 1 -------------------------------------------------------------------

bool embedding_dimension(const Options& o, std::vector<std::string>& out) {
    Rng rng = rng_for(o, 1);
    Tally bouquet_dim, bouquet_ok, family_ok, family_dim, family_parts;
    std::size_t bouquet_sets = 0, family_sets = 0, max_dim = 0;
    for (int t = 0; t < 100; ++t) {
        const auto b = fixtures::random_bouquet(rng, 4, 3, 14);
        const auto f = bouquet_embedding(b.family, b.core, b.k, b.delta);
        const auto want = bouquet_embedding_dim(b.k, b.delta);
        bouquet_dim.record(f.dim() == want, [&] {
            return describe(b.family) + " dim " + std::to_string(f.dim()) + " != " + std::to_string(want);
        });
        VerifyOptions vo;
        vo.size_cap = b.k + 1;
        vo.excluded_core = b.core;
        vo.core_size_cap = b.k;
        const auto rep = verify_embedding(b.family, f, vo);
        bouquet_sets += rep.sets_checked;
        bouquet_ok.record(rep.ok, [&] { return describe(b.family) + " core " + join(b.core); });
    }
    for (int t = 0; t < 50; ++t) {
        const auto s = fixtures::random_simple_family(rng, 3, 2, 10);
        const auto stats = analyze(s);
        const auto full = full_embedding(s);
        const auto rep = verify_embedding(s, full.embedding);
        family_sets += rep.sets_checked;
        family_ok.record(rep.ok, [&] { return describe(s); });
        const auto parts = full.decomposition.parts.size();
        const auto kd = static_cast<std::size_t>(stats.k * stats.delta);
        family_parts.record(parts <= kd * kd, [&] { return describe(s) + " L=" + std::to_string(parts); });
        family_dim.record(full.embedding.dim() <= parts * bouquet_embedding_dim(stats.k, stats.delta),
                          [&] { return describe(s) + " dim " + std::to_string(full.embedding.dim()); });
        max_dim = std::max(max_dim, full.embedding.dim());
    }
    out.push_back(bouquet_dim.line("bouquet dimension = 2+2kD+(kD)^2"));
    out.push_back(bouquet_ok.line("bouquet verification, size cap k+1") + " (" + std::to_string(bouquet_sets) +
                  " subsets)");
    out.push_back(family_ok.line("full embedding verification") + " (" + std::to_string(family_sets) + " subsets)");
    out.push_back(family_parts.line("parts L <= k^2 D^2"));
    out.push_back(family_dim.line("dimension <= L (2+2kD+(kD)^2)") + " (largest " + std::to_string(max_dim) + ")");
    return !bouquet_dim.failed && !bouquet_ok.failed && !family_ok.failed && !family_parts.failed &&
           !family_dim.failed;
}

// ---- 2 -------------------------------------------------------------------

bool setcover_vbp(const Options& o, std::vector<std::string>& out) {
    Rng rng = rng_for(o, 2);
    std::vector<SetSystem> families{
        SetSystem(4, {{0, 1}, {2, 3}}),
        SetSystem(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}),
        SetSystem(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}),
    };
    while (families.size() < 60) families.push_back(fixtures::random_simple_family(rng, 3, 2, 10));
    Tally tally;
    int largest = 0;
    for (const auto& s : families) {
        const auto r = setcover_to_vbp(s);
        const auto bins = value_of(solve::vbp(r.instance, solve::VbpMode::Exact, o.caps));
        const auto cover = value_of(solve::setcover(s, solve::CoverMode::Exact, o.caps));
        const auto naive = oracle::setcover(s);
        largest = std::max(largest, static_cast<int>(std::stol(cover.str())));
        tally.record(bins == cover && naive && Rational(*naive) == cover, [&] {
            return describe(s) + " vbp " + bins.str() + " cover " + cover.str();
        });
    }
    out.push_back(tally.line("VBP optimum = set cover optimum"));
    out.push_back("largest cover " + std::to_string(largest));
    return tally.failed == 0;
}

// ---- 3 -------------------------------------------------------------------

bool monoclique_vs(const Options& o, std::vector<std::string>& out) {
    const std::pair<int, int> pairs[] = {{1, 2}, {2, 2}, {2, 3}};
    bool pass = true;
    for (const auto& [k, b] : pairs) {
        Tally low, high, completeness, soundness;
        for (int n = 1; n <= 6; ++n) {
            for (const auto& g : fixtures::all_graphs(n)) {
                const auto r = monoclique_to_vs(g, k, b, o.caps);
                const auto ms = value_of(solve::vs(r.instance, solve::VsMode::Exact, Norm::infinity(), o.caps));
                const int m = minimax_mono_clique(g, k, o.caps).value;
                auto what = [&] { return describe(g) + " makespan " + ms.str() + " m " + std::to_string(m); };
                low.record((ms <= Rational(1)) == (m < b), what);
                high.record((ms >= Rational(b)) == (m >= b), what);
                if (k_colorable(g, k, o.caps)) completeness.record(ms <= Rational(1), what);
                if (m >= b) soundness.record(ms >= Rational(b), what);
            }
        }
        const std::string tag = "k=" + std::to_string(k) + " B=" + std::to_string(b);
        out.push_back(low.line(tag + " makespan <= 1 iff m < B"));
        out.push_back(high.line(tag + " makespan >= B iff m >= B"));
        out.push_back(completeness.line(tag + " chi <= k implies makespan <= 1"));
        out.push_back(soundness.line(tag + " m >= B implies makespan >= B"));
        pass = pass && !low.failed && !high.failed && !completeness.failed && !soundness.failed;
    }
    return pass;
}

// ---- 4 -------------------------------------------------------------------

bool lex_amplification(const Options& o, std::vector<std::string>& out) {
    SearchCaps caps = o.caps;
    caps.mono_vertices = std::max(caps.mono_vertices, 16);
    Tally chi, mono, chi_oracle;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : fixtures::all_graphs(n)) {
            const auto g2 = lex_amplify(g, 2, caps);
            const int c1 = invariants(g, caps).chi;
            const int c2 = invariants(g2, caps).chi;
            chi_oracle.record(c1 == oracle::chromatic_number(g), [&] { return describe(g); });
            chi.record(c2 <= c1 * c1, [&] {
                return describe(g) + " chi " + std::to_string(c1) + " chi(G^2) " + std::to_string(c2);
            });
            for (int k = 1; k <= 2; ++k) {
                const int m1 = minimax_mono_clique(g, k, caps).value;
                const int m2 = minimax_mono_clique(g2, k, caps).value;
                mono.record(m2 >= m1 * m1, [&] {
                    return describe(g) + " k=" + std::to_string(k) + " m " + std::to_string(m1) + " m(G^2) " +
                           std::to_string(m2);
                });
            }
        }
    }
    out.push_back(chi_oracle.line("chi agrees with coloring enumeration"));
    out.push_back(chi.line("chi(G^2) <= chi(G)^2"));
    out.push_back(mono.line("m(G^2,k) >= m(G,k)^2 for k=1,2"));
    return !chi.failed && !mono.failed && !chi_oracle.failed;
}

// ---- 5 -------------------------------------------------------------------

bool ramsey_surrogate(const Options& o, std::vector<std::string>& out) {
    Rng rng = rng_for(o, 5);
    auto check = [&](Tally& t, const Graph& g) {
        const int omega = oracle::clique_number(g);
        const int alpha = oracle::clique_number(complement(g));
        mpz_class bound;
        mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(alpha + omega), static_cast<unsigned long>(omega));
        t.record(mpz_class(g.n()) < bound, [&] { return describe(g); });
    };
    Tally all, random;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : fixtures::all_graphs(n)) check(all, g);
    }
    for (int t = 0; t < 200; ++t) {
        const int n = uniform(rng, 1, 9);
        const int den = uniform(rng, 2, 6);
        check(random, fixtures::random_graph(rng, n, uniform(rng, 0, den), den));
    }
    out.push_back(all.line("all graphs n <= 6"));
    out.push_back(random.line("random graphs n <= 9"));
    return !all.failed && !random.failed;
}

// ---- 6 -------------------------------------------------------------------

bool long_code_bhc(const Options& o, std::vector<std::string>& out) {
    constexpr int k = 3;
    const auto lc = fixtures::satisfiable_star_label_cover();
    const auto r = labelcover_to_bhc(lc, k, o.caps);
    Tally uniform_edges, constraint;
    for (const auto& e : r.hypergraph.edges()) {
        uniform_edges.record(static_cast<int>(e.size()) == k * k, [&] { return join(e); });
        constraint.record(oracle::lc_constraint_holds(lc, k, r.cloud_size, e), [&] { return join(e); });
    }
    const auto best = best_labeling(lc, o.caps);
    const auto check = color_check(r.hypergraph, k, dictator_coloring_bhc(lc, r, best.witness));
    const bool complete = best.value == Rational(1) && check.balance <= 2 * k && r.hypergraph.size() > 0;
    out.push_back("satisfiable star: " + std::to_string(r.hypergraph.n()) + " vertices, " +
                  std::to_string(r.hypergraph.size()) + " edges");
    out.push_back(uniform_edges.line("edges are k^2-uniform"));
    out.push_back(constraint.line("edges obey the per-color bound (independent check)"));
    out.push_back("dictator coloring balance " + std::to_string(check.balance) + " (bound " + std::to_string(2 * k) +
                  "), label cover value " + best.value.str());

    auto soundness = [&](const std::string& name, const LabelCover& bad) {
        const auto rb = labelcover_to_bhc(bad, k, o.caps);
        const auto col = solve_coloring(rb.hypergraph, k, ColoringGoal::proper(), o.caps);
        out.push_back(name + ": value " + best_labeling(bad, o.caps).value.str() + ", " +
                      std::to_string(rb.hypergraph.size()) + " edges, proper 3-coloring " +
                      (col ? "found" : "ruled out by exhaustion"));
        return !col.has_value();
    };
    const bool sound = soundness("conflicting-projection fixture", fixtures::conflict_label_cover());
    soundness("conflicting star (informational)", fixtures::conflicting_star_label_cover());
    return !uniform_edges.failed && !constraint.failed && complete && sound;
}

// ---- 7 -------------------------------------------------------------------

bool rainbow_reduction(const Options& o, std::vector<std::string>& out) {
    Rng rng = rng_for(o, 7);
    bool pass = true;
    const std::pair<int, int> cubes[] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& [k, n] : cubes) {
        const auto h = gen_H_r_n_k(k, n, k / 2, o.caps);
        const bool colorable = solve_coloring(h, 2, ColoringGoal::two_color(), o.caps).has_value();
        out.push_back("H_" + std::to_string(k / 2) + "^" + std::to_string(n) + "[" + std::to_string(k) + "]: " +
                      std::to_string(h.size()) + " edges, 2-coloring " + (colorable ? "found" : "ruled out"));
        pass = pass && !colorable;
    }

    auto gadget = [&](Tally& t, int& with_property, const TruthTableFn& f) {
        const auto g = gadget_check(f, o.caps);
        with_property += g.two_coloring_property;
        t.record(!g.two_coloring_property || g.one_fixing, [&] {
            std::string s;
            for (auto v : f.table) s += static_cast<char>('0' + v);
            return s;
        });
    };
    Tally small, large;
    int small_prop = 0, large_prop = 0;
    for (int mask = 0; mask < 8; ++mask) {
        TruthTableFn f{3, 1, {}};
        for (int x = 0; x < 3; ++x) f.table.push_back(static_cast<std::uint8_t>((mask >> x) & 1));
        gadget(small, small_prop, f);
    }
    for (int t = 0; t < 10000; ++t) gadget(large, large_prop, fixtures::random_truth_table(rng, 3, 2));
    out.push_back(small.line("property implies 1-fixing, (k,n)=(3,1) exhaustive") + " (" +
                  std::to_string(small_prop) + " with the property)");
    out.push_back(large.line("property implies 1-fixing, (k,n)=(3,2) random") + " (" + std::to_string(large_prop) +
                  " with the property)");
    pass = pass && !small.failed && !large.failed;

    constexpr int k = 3;
    auto complete = [&](const std::string& name, const LabelCover& lc) {
        const auto r = labelcover_to_rainbow(lc, k, o.caps);
        const auto best = best_labeling(lc, o.caps);
        const bool rainbow = best.value == Rational(1) &&
                             color_check(r.hypergraph, k, dictator_coloring_rainbow(lc, r, best.witness)).rainbow;
        out.push_back(name + ": " + std::to_string(r.hypergraph.n()) + " masters, " +
                      std::to_string(r.hypergraph.size()) + " edges, dictator coloring " +
                      (rainbow ? "rainbow" : "not rainbow"));
        return rainbow;
    };
    auto sound = [&](const std::string& name, const LabelCover& lc) {
        const auto r = labelcover_to_rainbow(lc, k, o.caps);
        const bool colorable = solve_coloring(r.hypergraph, 2, ColoringGoal::two_color(), o.caps).has_value();
        out.push_back(name + ": value " + best_labeling(lc, o.caps).value.str() + ", " +
                      std::to_string(r.hypergraph.n()) + " masters, " + std::to_string(r.hypergraph.size()) +
                      " edges, 2-coloring " + (colorable ? "found" : "ruled out"));
        return !colorable;
    };
    pass = complete("identity projection", fixtures::identity_label_cover(2)) && pass;
    pass = complete("satisfiable star", fixtures::satisfiable_star_label_cover()) && pass;
    pass = sound("conflicting-projection fixture", fixtures::conflict_label_cover()) && pass;
    pass = sound("conflicting star", fixtures::conflicting_star_label_cover()) && pass;
    return pass;
}

// ---- 8 -------------------------------------------------------------------

bool rainbow_vbc(const Options& o, std::vector<std::string>& out) {
    Rng rng = rng_for(o, 8);
    Tally colorable, fano;
    auto vbc_value = [&](const Hypergraph& h) {
        return value_of(solve::vbc(rainbow_to_vbc(h), solve::VbcMode::Exact, o.caps));
    };
    auto try_rainbow = [&](const Hypergraph& h, int k) {
        if (h.size() == 0 || !solve_coloring(h, k, ColoringGoal::rainbow(), o.caps)) return;
        const auto v = vbc_value(h);
        colorable.record(v >= Rational(k), [&] {
            return "k=" + std::to_string(k) + " n=" + std::to_string(h.n()) + " optimum " + v.str();
        });
    };
    try_rainbow(Hypergraph(2, {{0, 1}}), 2);
    try_rainbow(Hypergraph(3, {{0, 1, 2}}), 3);
    try_rainbow(labelcover_to_rainbow(fixtures::identity_label_cover(2), 3, o.caps).hypergraph, 3);
    for (int t = 0; t < 120; ++t) {
        const int n = uniform(rng, 2, 10);
        const auto h = fixtures::random_hypergraph(rng, n, uniform(rng, 1, 6), std::min(n, 4));
        for (int k = 2; k <= 3; ++k) try_rainbow(h, k);
    }
    auto not_two_colorable = [&](const std::string& name, const Hypergraph& h) {
        const bool col = solve_coloring(h, 2, ColoringGoal::two_color(), o.caps).has_value();
        const auto v = vbc_value(h);
        fano.record(!col && v == Rational(1), [&] { return name + " optimum " + v.str(); });
    };
    not_two_colorable("Fano plane", fixtures::fano_plane());
    not_two_colorable("rainbow conflict fixture",
                      labelcover_to_rainbow(fixtures::conflict_label_cover(), 3, o.caps).hypergraph);
    out.push_back(colorable.line("k-rainbow-colorable: VBC optimum >= k"));
    out.push_back(fano.line("not 2-colorable: VBC optimum = 1"));
    return colorable.failed == 0 && colorable.checked >= 20 && fano.failed == 0;
}

// ---- 9 -------------------------------------------------------------------

SetSystem random_cover_instance(Rng& rng) {
    const int n = uniform(rng, 1, 8);
    const int m = uniform(rng, 1, 8);
    std::vector<ElementSet> sets;
    for (int j = 0; j < m; ++j) {
        std::vector<Element> s;
        for (int e = 0; e < n; ++e) {
            if (uniform(rng, 0, 2) == 0) s.push_back(e);
        }
        if (s.empty()) s.push_back(uniform(rng, 0, n - 1));
        sets.push_back(make_set(std::move(s)));
    }
    for (int e = 0; e < n; ++e) {
        bool hit = false;
        for (const auto& s : sets) hit = hit || std::binary_search(s.begin(), s.end(), e);
        if (!hit) {
            auto& s = sets[static_cast<std::size_t>(uniform(rng, 0, m - 1))];
            s.push_back(e);
            s = make_set(s);
        }
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return SetSystem(n, std::move(sets));
}

bool solver_cross_validation(const Options& o, std::vector<std::string>& out) {
    Rng rng = rng_for(o, 9);
    Tally vbp, vs, vbc, cover;
    for (int t = 0; t < 100; ++t) {
        const int jobs = uniform(rng, 1, 8);
        const int dim = uniform(rng, 1, 3);
        const int den = uniform(rng, 2, 4);

        const auto p = fixtures::random_instance(rng, ProblemKind::VBP, jobs, dim, den);
        const auto rp = solve::vbp(p, solve::VbpMode::Exact, o.caps);
        const auto ep = evaluate(p, rp.witness);
        vbp.record(value_of(rp) == Rational(oracle::vbp(p)) && ep.feasible &&
                       Rational(rp.witness.part_count) == value_of(rp),
                   [&] { return "instance " + std::to_string(t) + " exact " + value_of(rp).str(); });

        const auto s = fixtures::random_instance(rng, ProblemKind::VS, jobs, dim, den, uniform(rng, 1, 3));
        const auto rs = solve::vs(s, solve::VsMode::Exact, Norm::infinity(), o.caps);
        const auto es = evaluate(s, rs.witness);
        vs.record(value_of(rs) == oracle::vs(s) && es.value.radicand == value_of(rs),
                  [&] { return "instance " + std::to_string(t) + " exact " + value_of(rs).str(); });

        const auto c = fixtures::random_instance(rng, ProblemKind::VBC, jobs, dim, den);
        const auto rc = solve::vbc(c, solve::VbcMode::Exact, o.caps);
        const auto ec = evaluate(c, rc.witness);
        vbc.record(value_of(rc) == Rational(oracle::vbc(c)) && (value_of(rc) == Rational(0) || ec.feasible),
                   [&] { return "instance " + std::to_string(t) + " exact " + value_of(rc).str(); });

        const auto sc = random_cover_instance(rng);
        const auto rsc = solve::setcover(sc, solve::CoverMode::Exact, o.caps);
        std::vector<bool> hit(static_cast<std::size_t>(sc.universe_size()), false);
        for (int j : rsc.cover) {
            for (Element e : sc.sets()[static_cast<std::size_t>(j)]) hit[static_cast<std::size_t>(e)] = true;
        }
        const bool covers = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        cover.record(oracle::setcover(sc) == std::optional<int>(static_cast<int>(rsc.cover.size())) && covers &&
                         Rational(static_cast<std::int64_t>(rsc.cover.size())) == value_of(rsc),
                     [&] { return describe(sc); });
    }
    out.push_back(vbp.line("vbp exact = partition enumeration"));
    out.push_back(vs.line("vs exact = assignment enumeration"));
    out.push_back(vbc.line("vbc exact = partition enumeration"));
    out.push_back(cover.line("setcover exact = subfamily enumeration"));
    return !vbp.failed && !vs.failed && !vbc.failed && !cover.failed;
}

struct CriterionDef {
    const char* title;
    double budget;
    bool (*fn)(const Options&, std::vector<std::string>&);
};

const CriterionDef kCriterionDefs[] = {
    {"embedding dimension and correctness", 120, embedding_dimension},
    {"set cover / vector bin packing equivalence", 120, setcover_vbp},
    {"monochromatic clique / vector scheduling gap", 300, monoclique_vs},
    {"lexicographic amplification", 180, lex_amplification},
    {"Ramsey surrogate", 60, ramsey_surrogate},
    {"long-code balanced coloring reduction", 300, long_code_bhc},
    {"rainbow coloring reduction", 300, rainbow_reduction},
    {"rainbow coloring / vector bin covering", 120, rainbow_vbc},
    {"solver cross-validation", 180, solver_cross_validation},
    {"determinism", 0, nullptr},
};

std::string partial_report(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << "criterion " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.title << '\n';
        for (const auto& d : r.details) os << "  " << d << '\n';
    }
    return os.str();
}

CriterionResult determinism(const std::vector<CriterionResult>& first, const Options& options) {
    CriterionResult r;
    r.id = kCriteria;
    r.title = kCriterionDefs[kCriteria - 1].title;
    const auto start = std::chrono::steady_clock::now();
    std::vector<CriterionResult> second;
    for (int id = 1; id < kCriteria; ++id) second.push_back(run(id, options));
    const auto a = partial_report(first);
    const auto b = partial_report(second);
    r.pass = a == b;
    r.details.push_back("two runs with seed " + std::to_string(options.seed) + ": reports " +
                        (r.pass ? "byte-identical" : "differ") + " (" + std::to_string(a.size()) + " bytes)");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

CriterionResult run(int id, const Options& options) {
    if (id < 1 || id > kCriteria) throw std::out_of_range("no such criterion: " + std::to_string(id));
    if (id == kCriteria) {
        std::vector<CriterionResult> first;
        for (int i = 1; i < kCriteria; ++i) first.push_back(run(i, options));
        auto r = determinism(first, options);
        for (const auto& f : first) r.seconds += f.seconds;
        return r;
    }
    const CriterionDef& def = kCriterionDefs[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = def.title;
    r.budget_seconds = def.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.pass = def.fn(options, r.details);
    } catch (const CapExceeded& e) {
        r.details.push_back(std::string("cap exceeded: ") + e.what());
    } catch (const std::exception& e) {
        r.details.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget_seconds) {
        r.pass = false;
        r.details.push_back("over the runtime budget");
    }
    return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
    std::vector<CriterionResult> results;
    for (int id = 1; id < kCriteria; ++id) results.push_back(run(id, options));
    results.push_back(determinism(results, options));
    return results;
}

std::string report(const std::vector<CriterionResult>& results, const Options& options) {
    std::ostringstream os;
    os << "vecpack acceptance report, seed " << options.seed << '\n';
    os << partial_report(results);
    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    os << "passed " << passed << " of " << results.size() << '\n';
    return os.str();
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << r.seconds << " s";
    if (r.budget_seconds > 0) os << ", budget " << r.budget_seconds << " s";
    os << ')';
    return os.str();
}

}  // namespace vecpack::suite
