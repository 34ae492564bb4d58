#include "vecpack/serialize.hpp"

#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "vecpack/errors.hpp"

namespace vecpack {

using json = nlohmann::json;

namespace {

// A JSON value together with its path, for error messages.
struct Node {
    const json& j;
    std::string path;

    Node at(const std::string& key) const {
        if (!j.contains(key)) throw SchemaError(path, "missing field \"" + key + "\"");
        return {j.at(key), path.empty() ? key : path + "." + key};
    }
    Node operator[](std::size_t i) const { return {j.at(i), path + "[" + std::to_string(i) + "]"}; }
    bool has(const std::string& key) const { return j.contains(key); }
    std::size_t size() const { return j.size(); }

    [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path, what); }

    void expect_object(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const {
        if (!j.is_object()) fail("expected an object");
        std::set<std::string> known{"type"};
        for (const char* k : required) {
            known.insert(k);
            if (!j.contains(k)) fail(std::string("missing field \"") + k + "\"");
        }
        for (const char* k : optional) known.insert(k);
        for (const auto& item : j.items()) {
            if (!known.count(item.key())) fail("unknown field \"" + item.key() + "\"");
        }
    }
    const Node& expect_array() const {
        if (!j.is_array()) fail("expected an array");
        return *this;
    }
    long integer() const {
        if (!j.is_number_integer()) fail("expected an integer");
        return j.get<long>();
    }
    int nonneg() const {
        const long v = integer();
        if (v < 0 || v > std::numeric_limits<int>::max()) fail("expected a nonnegative int");
        return static_cast<int>(v);
    }
    bool boolean() const {
        if (!j.is_boolean()) fail("expected a boolean");
        return j.get<bool>();
    }
    std::string string() const {
        if (!j.is_string()) fail("expected a string");
        return j.get<std::string>();
    }
    Rational rational() const {
        try {
            return Rational::parse(string());
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    std::vector<int> ints() const {
        expect_array();
        std::vector<int> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].nonneg());
        return out;
    }
};

// Constructor invariant failures become schema errors at the object's path.
template <class F>
auto build(const Node& n, F&& f) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        n.fail(e.what());
    }
}

PackingInstance parse_instance(const Node& n) {
    n.expect_object({"kind", "dim", "jobs"}, {"machines"});
    const auto kind = build(n.at("kind"), [&] { return problem_kind_from_string(n.at("kind").string()); });
    const int dim = n.at("dim").nonneg();
    const Node jobs = n.at("jobs");
    jobs.expect_array();
    const Rational zero(0), one(1);
    std::vector<VectorJob> out;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Node row = jobs[i];
        row.expect_array();
        if (static_cast<int>(row.size()) != dim) row.fail("expected " + std::to_string(dim) + " coordinates");
        VectorJob job;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const Node cell = row[c];
            Rational v = cell.rational();
            if (v < zero) cell.fail("coordinate < 0");
            if (v > one) cell.fail("coordinate > 1");
            job.coords.push_back(std::move(v));
        }
        out.push_back(std::move(job));
    }
    std::optional<int> machines;
    if (n.has("machines")) machines = n.at("machines").nonneg();
    return build(n, [&] { return PackingInstance(kind, static_cast<std::size_t>(dim), std::move(out), machines); });
}

SetSystem parse_set_system(const Node& n) {
    n.expect_object({"universe", "sets"});
    const int u = n.at("universe").nonneg();
    const Node sets = n.at("sets");
    sets.expect_array();
    std::vector<ElementSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) out.push_back(sets[i].ints());
    return build(n, [&] { return SetSystem(u, std::move(out)); });
}

Graph parse_graph(const Node& n) {
    n.expect_object({"n", "edges"});
    const int v = n.at("n").nonneg();
    const Node edges = n.at("edges");
    edges.expect_array();
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto e = edges[i].ints();
        if (e.size() != 2) edges[i].fail("an edge has exactly 2 endpoints");
        out.emplace_back(e[0], e[1]);
    }
    return build(n, [&] { return Graph(v, std::move(out)); });
}

Hypergraph parse_hypergraph(const Node& n) {
    n.expect_object({"n", "edges"});
    const int v = n.at("n").nonneg();
    const Node edges = n.at("edges");
    edges.expect_array();
    std::vector<Hyperedge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) out.push_back(edges[i].ints());
    return build(n, [&] { return Hypergraph(v, std::move(out)); });
}

LabelCover parse_label_cover(const Node& n) {
    n.expect_object({"left", "right", "sigma_left", "sigma_right", "edges"});
    const Node edges = n.at("edges");
    edges.expect_array();
    std::vector<LcEdge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Node e = edges[i];
        e.expect_object({"u", "v", "pi"});
        out.push_back(LcEdge{e.at("u").nonneg(), e.at("v").nonneg(), e.at("pi").ints()});
    }
    return build(n, [&] {
        return LabelCover(n.at("left").nonneg(), n.at("right").nonneg(), n.at("sigma_left").nonneg(),
                          n.at("sigma_right").nonneg(), std::move(out));
    });
}

Embedding parse_embedding(const Node& n) {
    n.expect_object({"dim", "map"});
    const int dim = n.at("dim").nonneg();
    const Node map = n.at("map");
    if (!map.j.is_object()) map.fail("expected an object");
    std::vector<std::vector<Rational>> rows(map.size());
    for (const auto& item : map.j.items()) {
        const Node row{item.value(), map.path + "." + item.key()};
        std::size_t pos = 0;
        long e = -1;
        try {
            e = std::stol(item.key(), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.key().size() || e < 0 || static_cast<std::size_t>(e) >= rows.size() ||
            std::to_string(e) != item.key()) {
            row.fail("element keys must be 0.." + std::to_string(rows.size() - 1));
        }
        row.expect_array();
        for (std::size_t c = 0; c < row.size(); ++c) rows[e].push_back(row[c].rational());
    }
    return build(n, [&] { return Embedding(static_cast<std::size_t>(dim), std::move(rows)); });
}

GapCertificate parse_certificate(const Node& n) {
    n.expect_object({"reduction_name", "completeness", "soundness", "parameters"});
    GapCertificate c;
    c.reduction_name = n.at("reduction_name").string();
    const Node comp = n.at("completeness");
    comp.expect_object({"witness_present", "achieved_value"});
    c.completeness = {comp.at("witness_present").boolean(), comp.at("achieved_value").rational()};
    const Node sound = n.at("soundness");
    sound.expect_object({"exhaustive", "bound_value"});
    c.soundness = {sound.at("exhaustive").boolean(), sound.at("bound_value").rational()};
    const Node params = n.at("parameters");
    if (!params.j.is_object()) params.fail("expected an object");
    for (const auto& item : params.j.items()) {
        c.parameters[item.key()] = Node{item.value(), params.path + "." + item.key()}.string();
    }
    return c;
}

TruthTableFn parse_truth_table(const Node& n) {
    n.expect_object({"k", "n", "table"});
    TruthTableFn f;
    f.k = n.at("k").nonneg();
    f.n = n.at("n").nonneg();
    for (int v : n.at("table").ints()) f.table.push_back(static_cast<std::uint8_t>(std::min(v, 255)));
    build(n, [&] {
        f.validate();
        return 0;
    });
    return f;
}

Cnf parse_cnf(const Node& n) {
    n.expect_object({"variables", "clauses"});
    Cnf f;
    f.variables = n.at("variables").nonneg();
    const Node clauses = n.at("clauses");
    clauses.expect_array();
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const Node c = clauses[i];
        c.expect_array();
        Clause clause;
        for (std::size_t j = 0; j < c.size(); ++j) {
            const long lit = c[j].integer();
            if (lit == 0 || std::abs(lit) > f.variables) c[j].fail("literal out of range");
            clause.push_back(Literal{static_cast<int>(std::abs(lit) - 1), lit < 0});
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

ColoringDoc parse_coloring(const Node& n) {
    n.expect_object({"k", "colors"});
    ColoringDoc c{n.at("k").nonneg(), n.at("colors").ints()};
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        if (c.colors[i] >= c.k) n.at("colors")[i].fail("color outside [0,k)");
    }
    return c;
}

Assignment parse_assignment(const Node& n) {
    n.expect_object({"part_count", "part_of"});
    Assignment a{n.at("part_of").ints(), n.at("part_count").nonneg()};
    for (std::size_t i = 0; i < a.part_of.size(); ++i) {
        if (a.part_of[i] >= a.part_count) n.at("part_of")[i].fail("part outside [0,part_count)");
    }
    return a;
}

std::string infer_type(const Node& n) {
    if (n.has("type")) return n.at("type").string();
    if (n.has("kind")) return "packing_instance";
    if (n.has("universe")) return "set_system";
    if (n.has("sigma_left")) return "label_cover";
    if (n.has("map")) return "embedding";
    if (n.has("reduction_name")) return "certificate";
    if (n.has("table")) return "truth_table";
    if (n.has("clauses")) return "cnf";
    if (n.has("colors")) return "coloring";
    if (n.has("part_of")) return "assignment";
    n.fail("cannot infer the document type; add a \"type\" field");
}

Document parse_node(const Node& n) {
    if (!n.j.is_object()) n.fail("expected an object");
    const std::string type = infer_type(n);
    if (type == "packing_instance") return parse_instance(n);
    if (type == "set_system") return parse_set_system(n);
    if (type == "graph") return parse_graph(n);
    if (type == "hypergraph") return parse_hypergraph(n);
    if (type == "label_cover") return parse_label_cover(n);
    if (type == "embedding") return parse_embedding(n);
    if (type == "certificate") return parse_certificate(n);
    if (type == "truth_table") return parse_truth_table(n);
    if (type == "cnf") return parse_cnf(n);
    if (type == "coloring") return parse_coloring(n);
    if (type == "assignment") return parse_assignment(n);
    throw SchemaError("type", "unknown document type \"" + type + "\"");
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json to_json(const PackingInstance& x) {
    json j{{"type", "packing_instance"}, {"kind", std::string(to_string(x.kind()))}, {"dim", x.dim()}};
    if (x.machines()) j["machines"] = *x.machines();
    j["jobs"] = json::array();
    for (const auto& job : x.jobs()) j["jobs"].push_back(rationals(job.coords));
    return j;
}
json to_json(const SetSystem& x) { return {{"type", "set_system"}, {"universe", x.universe_size()}, {"sets", x.sets()}}; }
json to_json(const Graph& x) {
    json e = json::array();
    for (const auto& [u, v] : x.edges()) e.push_back({u, v});
    return {{"type", "graph"}, {"n", x.n()}, {"edges", e}};
}
json to_json(const Hypergraph& x) { return {{"type", "hypergraph"}, {"n", x.n()}, {"edges", x.edges()}}; }
json to_json(const LabelCover& x) {
    json e = json::array();
    for (const auto& edge : x.edges()) e.push_back({{"u", edge.u}, {"v", edge.v}, {"pi", edge.pi}});
    return {{"type", "label_cover"}, {"left", x.left()}, {"right", x.right()}, {"sigma_left", x.sigma_left()},
            {"sigma_right", x.sigma_right()}, {"edges", e}};
}
json to_json(const Embedding& x) {
    json m = json::object();
    for (std::size_t e = 0; e < x.elements(); ++e) m[std::to_string(e)] = rationals(x.rows()[e]);
    return {{"type", "embedding"}, {"dim", x.dim()}, {"map", m}};
}
json to_json(const GapCertificate& x) {
    return {{"type", "certificate"},
            {"reduction_name", x.reduction_name},
            {"completeness", {{"witness_present", x.completeness.witness_present},
                              {"achieved_value", x.completeness.achieved_value.str()}}},
            {"soundness", {{"exhaustive", x.soundness.exhaustive}, {"bound_value", x.soundness.bound_value.str()}}},
            {"parameters", x.parameters}};
}
json to_json(const TruthTableFn& x) {
    std::vector<int> t(x.table.begin(), x.table.end());
    return {{"type", "truth_table"}, {"k", x.k}, {"n", x.n}, {"table", t}};
}
json to_json(const Cnf& x) {
    json cs = json::array();
    for (const auto& c : x.clauses) {
        json lits = json::array();
        for (const auto& l : c) lits.push_back(l.negated ? -(l.var + 1) : l.var + 1);
        cs.push_back(lits);
    }
    return {{"type", "cnf"}, {"variables", x.variables}, {"clauses", cs}};
}
json to_json(const ColoringDoc& x) { return {{"type", "coloring"}, {"k", x.k}, {"colors", x.colors}}; }
json to_json(const Assignment& x) { return {{"type", "assignment"}, {"part_count", x.part_count}, {"part_of", x.part_of}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Document parse_document(std::string_view text) {
    const json j = parse_json(text);
    return parse_node(Node{j, ""});
}

ReductionResult parse_reduction_result(std::string_view text) {
    const json j = parse_json(text);
    const Node n{j, ""};
    n.expect_object({"target", "certificate"});
    if (n.at("type").string() != "reduction_result") n.at("type").fail("expected \"reduction_result\"");
    ReductionResult r;
    const Document target = parse_node(n.at("target"));
    if (auto* p = std::get_if<PackingInstance>(&target)) r.target = *p;
    else if (auto* h = std::get_if<Hypergraph>(&target)) r.target = *h;
    else if (auto* g = std::get_if<Graph>(&target)) r.target = *g;
    else if (auto* l = std::get_if<LabelCover>(&target)) r.target = *l;
    else n.at("target").fail("target must be a packing instance, hypergraph, graph or label cover");
    const Node cert = n.at("certificate");
    if (infer_type(cert) != "certificate") cert.fail("expected a certificate");
    r.certificate = parse_certificate(cert);
    return r;
}

std::string serialize(const Document& doc) {
    return dump(std::visit([](const auto& x) { return to_json(x); }, doc));
}

std::string serialize(const ReductionResult& result) {
    json j{{"type", "reduction_result"},
           {"target", std::visit([](const auto& x) { return to_json(x); }, result.target)},
           {"certificate", to_json(result.certificate)}};
    return dump(j);
}

std::string_view document_type(const Document& doc) {
    static constexpr const char* names[] = {"packing_instance", "set_system", "graph",    "hypergraph",
                                            "label_cover",      "embedding",  "certificate", "truth_table",
                                            "cnf",              "coloring",   "assignment"};
    return names[doc.index()];
}

}  // namespace vecpack
