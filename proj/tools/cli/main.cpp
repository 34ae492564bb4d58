#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "suite.hpp"
#include "vecpack/embed.hpp"
#include "vecpack/errors.hpp"
#include "vecpack/fixtures.hpp"
#include "vecpack/reduce.hpp"
#include "vecpack/serialize.hpp"
#include "vecpack/solve.hpp"

namespace {

using namespace vecpack;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kBadInput = 1, kCap = 2, kVerification = 3 };

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string object;
    std::string family = "random";
    std::string fixture;
    int n = 4;
    int k = 3;
    int r = 1;
    int edges = 4;
    int max_edge = 3;
    int max_k = 3;
    int max_delta = 2;
    int sigma = 2;
    int neighbors = 3;
    int jobs = 6;
    int dim = 2;
    int den = 4;
    int machines = 2;
    int variables = 4;
    int clauses = 4;
    std::string kind = "vbp";
    std::string p = "1/2";
    std::uint64_t seed = 1;
    std::string output;
};

Document generate(const GenArgs& a) {
    fixtures::Rng rng(a.seed);
    const std::string& obj = a.object;
    if (obj == "graph") {
        if (a.family == "complete") return fixtures::complete_graph(a.n);
        if (a.family == "cycle") return fixtures::cycle_graph(a.n);
        if (a.family == "path") return fixtures::path_graph(a.n);
        if (a.family == "empty") return fixtures::empty_graph(a.n);
        if (a.family == "random") {
            const auto p = Rational::parse(a.p);
            if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("--p must lie in [0, 1]");
            return fixtures::random_graph(rng, a.n, static_cast<int>(p.numerator().get_si()),
                                          static_cast<int>(p.denominator().get_si()));
        }
    } else if (obj == "hypergraph") {
        if (a.family == "fano") return fixtures::fano_plane();
        if (a.family == "random") return fixtures::random_hypergraph(rng, a.n, a.edges, a.max_edge);
    } else if (obj == "hrnk") {
        return gen_H_r_n_k(a.k, a.n, a.r);
    } else if (obj == "setsys") {
        if (a.family == "random") return fixtures::random_simple_family(rng, a.max_k, a.max_delta, a.n);
        if (a.family == "bouquet") return fixtures::random_bouquet(rng, a.max_k, a.max_delta, a.n).family;
    } else if (obj == "labelcover") {
        const std::string& f = a.fixture;
        if (f == "identity") return fixtures::identity_label_cover(a.sigma);
        if (f == "conflict") return fixtures::conflict_label_cover();
        if (f == "star") return fixtures::star_label_cover(a.neighbors);
        if (f == "satisfiable-star") return fixtures::satisfiable_star_label_cover();
        if (f == "conflicting-star") return fixtures::conflicting_star_label_cover();
        if (f == "split") return fixtures::split_label_cover();
        throw std::invalid_argument("unknown label cover fixture '" + f + "'");
    } else if (obj == "instance") {
        std::string kind = a.kind;
        for (char& ch : kind) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        return fixtures::random_instance(rng, problem_kind_from_string(kind), a.jobs, a.dim, a.den, a.machines);
    } else if (obj == "cnf") {
        if (a.family == "random") return fixtures::random_3cnf(rng, a.variables, a.clauses);
        if (a.family == "single") return fixtures::single_clause();
        if (a.family == "contradiction") return fixtures::contradiction_3cnf();
    } else if (obj == "truthtable") {
        return fixtures::random_truth_table(rng, a.k, a.n);
    } else {
        throw std::invalid_argument("unknown object '" + obj + "'");
    }
    throw std::invalid_argument("unknown family '" + a.family + "' for " + obj);
}

// ---- reduce --------------------------------------------------------------------

struct ReduceArgs {
    std::string from;
    std::string to;
    std::string input;
    std::string output;
    std::string result;  // verify only
    int k = 2;
    int b = 2;
    int c = 2;
    std::optional<int> balance;
};

ReductionResult reduce(const ReduceArgs& a, const SearchCaps& caps) {
    const std::string text = read_text(a.input);
    const std::string route = a.from + "->" + a.to;
    if (route == "setcover->vbp") {
        const auto s = parse_as<SetSystem>(text);
        const auto r = setcover_to_vbp(s);
        return {r.instance, certify_setcover_to_vbp(s, r, caps)};
    }
    if (route == "monoclique->vs") {
        const auto g = parse_as<Graph>(text);
        const auto r = monoclique_to_vs(g, a.k, a.b, caps);
        return {r.instance, certify_monoclique_to_vs(g, a.k, a.b, r, caps)};
    }
    if (route == "graph->lex") {
        const auto g = parse_as<Graph>(text);
        auto amplified = lex_amplify(g, a.c, caps);
        auto cert = certify_lex_amplify(g, a.c, a.k, amplified, caps);
        return {std::move(amplified), std::move(cert)};
    }
    if (route == "bhc->vs") {
        const auto h = parse_as<Hypergraph>(text);
        const auto r = bhc_to_vs(h, a.k);
        return {r.instance, certify_bhc_to_vs(h, a.k, r, a.balance, caps)};
    }
    if (route == "labelcover->bhc") {
        const auto lc = parse_as<LabelCover>(text);
        const auto r = labelcover_to_bhc(lc, a.k, caps);
        return {r.hypergraph, certify_labelcover_to_bhc(lc, r, caps)};
    }
    if (route == "labelcover->rainbow") {
        const auto lc = parse_as<LabelCover>(text);
        const auto r = labelcover_to_rainbow(lc, a.k, caps);
        return {r.hypergraph, certify_labelcover_to_rainbow(lc, r, caps)};
    }
    if (route == "rainbow->vbc") {
        const auto h = parse_as<Hypergraph>(text);
        const auto inst = rainbow_to_vbc(h);
        return {inst, certify_rainbow_to_vbc(h, a.k, inst, caps)};
    }
    if (route == "3sat->labelcover") {
        const auto f = parse_as<Cnf>(text);
        auto lc = threesat_to_labelcover(f);
        auto cert = certify_threesat_to_labelcover(f, lc, caps);
        return {std::move(lc), std::move(cert)};
    }
    throw std::invalid_argument("unsupported reduction " + a.from + " -> " + a.to);
}

// ---- solve -------------------------------------------------------------------

struct SolveArgs {
    std::string problem;
    std::string mode = "exact";
    std::string input;
    std::string output;
    unsigned norm = 0;
    int k = 2;
    std::string goal = "proper";
    int balance = 1;
};

json objective_json(const ObjectiveValue& v) {
    json j;
    if (v.exact) j["optimum"] = v.exact->str();
    else j["optimum"] = {{"radicand", v.radicand.str()}, {"root", v.root}};
    j["approx"] = v.approx;
    return j;
}

json packing_json(const solve::SolveResult& r) {
    json j = objective_json(r.optimum);
    j["exhaustive"] = r.exhaustive;
    j["witness"] = {{"part_count", r.witness.part_count}, {"part_of", r.witness.part_of}};
    return j;
}

// A stored reduction result stands for its target.
std::string unwrap_reduction(std::string text) {
    const auto j = json::parse(text, nullptr, false);
    if (j.is_object() && j.value("type", "") == "reduction_result") {
        const auto r = parse_reduction_result(text);
        text = std::visit([](const auto& t) { return serialize(Document{t}); }, r.target);
    }
    return text;
}

json run_solve(const SolveArgs& a, const SearchCaps& caps) {
    const std::string text = unwrap_reduction(read_text(a.input));
    const std::string& p = a.problem;
    const std::string& m = a.mode;
    auto bad_mode = [&]() -> json { throw std::invalid_argument("mode '" + m + "' does not apply to " + p); };
    json out;
    if (p == "vbp") {
        const auto inst = parse_as<PackingInstance>(text);
        solve::VbpMode mode;
        if (m == "exact") mode = solve::VbpMode::Exact;
        else if (m == "first-fit") mode = solve::VbpMode::FirstFit;
        else if (m == "ffd") mode = solve::VbpMode::FirstFitDecreasing;
        else return bad_mode();
        out = packing_json(solve::vbp(inst, mode, caps));
    } else if (p == "vs") {
        const auto inst = parse_as<PackingInstance>(text);
        solve::VsMode mode;
        if (m == "exact") mode = solve::VsMode::Exact;
        else if (m == "list-greedy") mode = solve::VsMode::ListGreedy;
        else return bad_mode();
        out = packing_json(solve::vs(inst, mode, Norm{a.norm}, caps));
        out["norm"] = a.norm == 0 ? std::string("inf") : std::to_string(a.norm);
    } else if (p == "vbc") {
        const auto inst = parse_as<PackingInstance>(text);
        solve::VbcMode mode;
        if (m == "exact") mode = solve::VbcMode::Exact;
        else if (m == "greedy") mode = solve::VbcMode::Greedy;
        else return bad_mode();
        out = packing_json(solve::vbc(inst, mode, caps));
    } else if (p == "setcover") {
        const auto s = parse_as<SetSystem>(text);
        solve::CoverMode mode;
        if (m == "exact") mode = solve::CoverMode::Exact;
        else if (m == "greedy") mode = solve::CoverMode::Greedy;
        else return bad_mode();
        const auto r = solve::setcover(s, mode, caps);
        out = objective_json(r.optimum);
        out["exhaustive"] = r.exhaustive;
        out["witness"] = r.cover;
    } else if (p == "labelcover") {
        if (m != "exact") return bad_mode();
        const auto lc = parse_as<LabelCover>(text);
        const auto r = best_labeling(lc, caps);
        out["optimum"] = r.value.str();
        out["exhaustive"] = true;
        out["witness"] = {{"left", r.witness.left}, {"right", r.witness.right}};
    } else if (p == "chromatic") {
        if (m != "exact") return bad_mode();
        const auto inv = invariants(parse_as<Graph>(text), caps);
        out["optimum"] = inv.chi;
        out["omega"] = inv.omega;
        out["alpha"] = inv.alpha;
        out["exhaustive"] = true;
        out["witness"] = inv.optimal_coloring;
    } else if (p == "monoclique") {
        if (m != "exact") return bad_mode();
        const auto r = minimax_mono_clique(parse_as<Graph>(text), a.k, caps);
        out["optimum"] = r.value;
        out["k"] = a.k;
        out["exhaustive"] = true;
        out["witness"] = r.best_coloring;
    } else if (p == "coloring") {
        if (m != "exact") return bad_mode();
        const auto h = parse_as<Hypergraph>(text);
        ColoringGoal goal;
        if (a.goal == "proper") goal = ColoringGoal::proper();
        else if (a.goal == "balanced") goal = ColoringGoal::balanced(a.balance);
        else if (a.goal == "rainbow") goal = ColoringGoal::rainbow();
        else if (a.goal == "two-color") goal = ColoringGoal::two_color();
        else throw std::invalid_argument("unknown goal '" + a.goal + "'");
        const auto c = solve_coloring(h, a.k, goal, caps);
        out["feasible"] = c.has_value();
        out["exhaustive"] = true;
        out["witness"] = c ? json(*c) : json(nullptr);
    } else {
        throw std::invalid_argument("unknown problem '" + p + "'");
    }
    json full{{"problem", p}, {"mode", m}};
    full.update(out);
    return full;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string what;
    std::string embedding;
    std::optional<int> size_cap;
    ReduceArgs reduce;
};

int verify_embedding_cmd(const VerifyArgs& a) {
    const auto s = parse_as<SetSystem>(read_text(a.reduce.input));
    const Embedding f = a.embedding.empty() ? full_embedding(s).embedding : parse_as<Embedding>(read_text(a.embedding));
    VerifyOptions opts;
    opts.size_cap = a.size_cap;
    const auto rep = verify_embedding(s, f, opts);
    json out{{"ok", rep.ok}, {"dim", f.dim()}, {"sets_checked", rep.sets_checked}};
    json cex = json::array();
    for (const auto& c : rep.counterexamples) {
        cex.push_back({{"set", c.set}, {"expected_member", c.expected_member}, {"norm", c.norm.str()}});
    }
    out["counterexamples"] = cex;
    write_text(a.reduce.output, dump(out));
    if (!rep.ok) {
        std::cerr << "verification failed: " << rep.counterexamples.size() << " counterexample(s)\n";
        return kVerification;
    }
    return kOk;
}

int verify_reduction_cmd(const VerifyArgs& a, const SearchCaps& caps) {
    const auto stored = parse_reduction_result(read_text(a.reduce.result));
    const auto fresh = reduce(a.reduce, caps);
    const bool target_ok = stored.target == fresh.target;
    const bool cert_ok = stored.certificate == fresh.certificate;
    json out{{"target_matches", target_ok}, {"certificate_matches", cert_ok}};
    if (!cert_ok) out["expected_certificate"] = json::parse(serialize(ReductionResult{fresh})).at("certificate");
    write_text(a.reduce.output, dump(out));
    if (!target_ok || !cert_ok) {
        std::cerr << "verification failed: stored result differs from a fresh reduction\n";
        return kVerification;
    }
    return kOk;
}

// ---- suite -------------------------------------------------------------------

int suite_cmd(std::uint64_t seed, std::optional<int> criterion, const std::string& output) {
    suite::Options opts;
    opts.seed = seed;
    std::vector<suite::CriterionResult> results;
    if (criterion) {
        results.push_back(suite::run(*criterion, opts));
        std::cerr << suite::summary_line(results.back()) << '\n';
    } else {
        results = suite::run_all(opts);
        for (const auto& r : results) std::cerr << suite::summary_line(r) << '\n';
    }
    write_text(output, suite::report(results, opts));
    for (const auto& r : results) {
        if (!r.pass) return kVerification;
    }
    return kOk;
}

void add_reduce_options(CLI::App* cmd, ReduceArgs& a, bool need_input) {
    cmd->add_option("--from", a.from, "Source problem")->required();
    cmd->add_option("--to", a.to, "Target problem")->required();
    auto* in = cmd->add_option("-i,--input", a.input, "Source document ('-' for stdin)");
    if (need_input) in->required();
    cmd->add_option("-o,--output", a.output, "Output file (default stdout)");
    cmd->add_option("-k", a.k, "Colors / machines / alphabet parameter k");
    cmd->add_option("-b,--clique", a.b, "Clique size B (monoclique)");
    cmd->add_option("-c,--power", a.c, "Power C (lex)");
    cmd->add_option("--balance", a.balance, "Balance bound for the bhc certificate");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vecpack: vector packing reductions and exact solvers"};
    app.require_subcommand(1);
    SearchCaps caps;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a fixture document");
    gen_cmd->add_option("object", gen.object,
                        "graph | hypergraph | hrnk | setsys | labelcover | instance | cnf | truthtable")
        ->required();
    gen_cmd->add_option("--family", gen.family, "Family within the object kind");
    gen_cmd->add_option("--fixture", gen.fixture,
                        "Label cover fixture: identity | conflict | star | satisfiable-star | conflicting-star | split");
    gen_cmd->add_option("-n", gen.n, "Vertices, universe size or cube exponent");
    gen_cmd->add_option("-k", gen.k, "Alphabet size k");
    gen_cmd->add_option("-r", gen.r, "Missing-value budget r for hrnk");
    gen_cmd->add_option("--edges", gen.edges, "Edge count for random hypergraphs");
    gen_cmd->add_option("--max-edge", gen.max_edge, "Largest edge for random hypergraphs");
    gen_cmd->add_option("--max-k", gen.max_k, "Largest set for set systems");
    gen_cmd->add_option("--max-delta", gen.max_delta, "Largest degree for set systems");
    gen_cmd->add_option("--sigma", gen.sigma, "Alphabet for the identity label cover");
    gen_cmd->add_option("--neighbors", gen.neighbors, "Left neighbors for the star label cover");
    gen_cmd->add_option("--kind", gen.kind, "vbp | vs | vbc");
    gen_cmd->add_option("--jobs", gen.jobs, "Job count");
    gen_cmd->add_option("--dim", gen.dim, "Dimension");
    gen_cmd->add_option("--den", gen.den, "Coordinate denominator");
    gen_cmd->add_option("--machines", gen.machines, "Machines for vs");
    gen_cmd->add_option("--variables", gen.variables, "CNF variables");
    gen_cmd->add_option("--clauses", gen.clauses, "CNF clauses");
    gen_cmd->add_option("-p", gen.p, "Edge probability for random graphs, as p/q");
    gen_cmd->add_option("--seed", gen.seed, "64-bit seed");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction and certify it");
    add_reduce_options(reduce_cmd, red, true);

    SolveArgs sol;
    auto* solve_cmd = app.add_subcommand("solve", "Run a solver");
    solve_cmd->add_option("--problem", sol.problem,
                          "vbp | vs | vbc | setcover | labelcover | chromatic | monoclique | coloring")
        ->required();
    solve_cmd->add_option("--mode", sol.mode, "exact | first-fit | ffd | list-greedy | greedy");
    solve_cmd->add_option("-i,--input", sol.input, "Input document ('-' for stdin)")->required();
    solve_cmd->add_option("-o,--output", sol.output, "Output file (default stdout)");
    solve_cmd->add_option("--norm", sol.norm, "vs objective: 0 for l_inf, r for l_r");
    solve_cmd->add_option("-k", sol.k, "Colors for monoclique and coloring");
    solve_cmd->add_option("--goal", sol.goal, "proper | balanced | rainbow | two-color");
    solve_cmd->add_option("--balance", sol.balance, "Per-edge bound for the balanced goal");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check an embedding or a reduction result");
    verify_cmd->add_option("--what", ver.what, "embedding | reduction")->required();
    verify_cmd->add_option("-i,--input", ver.reduce.input, "Set system or reduction source")->required();
    verify_cmd->add_option("-o,--output", ver.reduce.output, "Output file (default stdout)");
    verify_cmd->add_option("--embedding", ver.embedding, "Embedding to check (default: build one)");
    verify_cmd->add_option("--size-cap", ver.size_cap, "Largest subset checked");
    verify_cmd->add_option("--result", ver.reduce.result, "Stored reduction result");
    verify_cmd->add_option("--from", ver.reduce.from, "Source problem");
    verify_cmd->add_option("--to", ver.reduce.to, "Target problem");
    verify_cmd->add_option("-k", ver.reduce.k, "Parameter k");
    verify_cmd->add_option("-b,--clique", ver.reduce.b, "Clique size B");
    verify_cmd->add_option("-c,--power", ver.reduce.c, "Power C");
    verify_cmd->add_option("--balance", ver.reduce.balance, "Balance bound");

    std::uint64_t suite_seed = 1;
    std::optional<int> criterion;
    std::string suite_output;
    auto* suite_cmd_ = app.add_subcommand("suite", "Run the acceptance battery");
    suite_cmd_->add_option("--seed", suite_seed, "64-bit seed");
    suite_cmd_->add_option("--criterion", criterion, "Run a single criterion")
        ->check(CLI::Range(1, suite::kCriteria));
    suite_cmd_->add_option("-o,--output", suite_output, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*gen_cmd) {
            write_text(gen.output, serialize(generate(gen)));
        } else if (*reduce_cmd) {
            write_text(red.output, serialize(reduce(red, caps)));
        } else if (*solve_cmd) {
            write_text(sol.output, dump(run_solve(sol, caps)));
        } else if (*verify_cmd) {
            if (ver.what == "embedding") return verify_embedding_cmd(ver);
            if (ver.what == "reduction") {
                if (ver.reduce.result.empty() || ver.reduce.from.empty() || ver.reduce.to.empty()) {
                    throw std::invalid_argument("verify --what reduction needs --result, --from and --to");
                }
                return verify_reduction_cmd(ver, caps);
            }
            throw std::invalid_argument("--what must be embedding or reduction");
        } else if (*suite_cmd_) {
            return suite_cmd(suite_seed, criterion, suite_output);
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kBadInput;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kOk;
}
