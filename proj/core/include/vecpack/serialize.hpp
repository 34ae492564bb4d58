#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "vecpack/embed.hpp"
#include "vecpack/errors.hpp"
#include "vecpack/graph.hpp"
#include "vecpack/hypergraph.hpp"
#include "vecpack/instance.hpp"
#include "vecpack/labelcover.hpp"
#include "vecpack/reduce.hpp"
#include "vecpack/setsys.hpp"

namespace vecpack {

/// Every object kind with a file form. Each document is a JSON object with a
/// "type" field; when it is missing, the type is inferred from the keys
/// where that is unambiguous.
///
///   packing_instance  {kind, dim, machines?, jobs: [["p/q", ...], ...]}
///   set_system        {universe, sets: [[int, ...], ...]}
///   graph             {n, edges: [[u, v], ...]}
///   hypergraph        {n, edges: [[int, ...], ...]}
///   label_cover       {left, right, sigma_left, sigma_right, edges: [{u, v, pi}, ...]}
///   embedding         {dim, map: {"element": ["p/q", ...]}}
///   certificate       {reduction_name, completeness, soundness, parameters}
///   truth_table       {k, n, table: [0|1, ...]}
///   cnf               {variables, clauses: [[+-(var+1), ...], ...]}
///   coloring          {k, colors: [int, ...]}
///   assignment        {part_count, part_of: [int, ...]}
///
/// Rationals are strings in lowest terms ("3", "1/2"); all lists are sorted
/// where order carries no meaning.
struct ColoringDoc {
    int k = 0;
    Coloring colors;
    friend bool operator==(const ColoringDoc&, const ColoringDoc&) = default;
};

using Document = std::variant<PackingInstance, SetSystem, Graph, Hypergraph, LabelCover, Embedding,
                              GapCertificate, TruthTableFn, Cnf, ColoringDoc, Assignment>;

/// Reduction output: target object plus its certificate.
struct ReductionResult {
    std::variant<Graph, Hypergraph, PackingInstance, LabelCover> target;
    GapCertificate certificate;
    friend bool operator==(const ReductionResult&, const ReductionResult&) = default;
};

/// Throws SchemaError (with the offending field path) on any violation,
/// including non-canonical rationals and unknown fields.
Document parse_document(std::string_view text);
ReductionResult parse_reduction_result(std::string_view text);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);
std::string serialize(const ReductionResult& result);

std::string_view document_type(const Document& doc);

template <class T>
T parse_as(std::string_view text) {
    auto doc = parse_document(text);
    if (auto* p = std::get_if<T>(&doc)) return std::move(*p);
    throw SchemaError("type", "document is a " + std::string(document_type(doc)));
}

}  // namespace vecpack
