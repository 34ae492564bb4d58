#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vecpack/graph.hpp"
#include "vecpack/hypergraph.hpp"
#include "vecpack/instance.hpp"
#include "vecpack/labelcover.hpp"
#include "vecpack/setsys.hpp"

namespace vecpack::fixtures {

using Rng = std::mt19937_64;

// named graphs
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
/// Every labeled graph on n vertices (2^(n choose 2) of them), n <= 8.
std::vector<Graph> all_graphs(int n);
/// G(n, p) with p = num/den.
Graph random_graph(Rng& rng, int n, int num, int den);

// hypergraphs
/// The seven lines of the Fano plane on vertices 0..6.
Hypergraph fano_plane();
Hypergraph random_hypergraph(Rng& rng, int n, int edges, int max_edge_size);

// set systems
struct Bouquet {
    SetSystem family;
    ElementSet core;
    int k = 0;      // bound passed to the embedding (>= every set size)
    int delta = 0;  // bound passed to the embedding (>= every degree)
};
/// Sunflower-bouquet with k <= max_k, delta <= max_delta and at most
/// max_universe elements, possibly including elements in no set.
Bouquet random_bouquet(Rng& rng, int max_k, int max_delta, int max_universe);
/// Simple, nontrivial family with some set of size >= 2, sets of size at
/// most max_k and degrees at most max_delta, over 2..max_universe elements.
SetSystem random_simple_family(Rng& rng, int max_k, int max_delta, int max_universe);

// packing instances, coordinates multiples of 1/den
PackingInstance random_instance(Rng& rng, ProblemKind kind, int jobs, int dim, int den,
                                int machines = 2);

// label cover and logic
Cnf random_3cnf(Rng& rng, int variables, int clauses);
/// Satisfiable single clause (x0 or x1 or x2).
Cnf single_clause();
/// (x) and (not x), each padded to four 3-clauses over fresh variables.
Cnf contradiction_3cnf();
TruthTableFn random_truth_table(Rng& rng, int k, int n);

/// One edge with the identity projection on sigma labels.
LabelCover identity_label_cover(int sigma);
/// Two parallel edges u - v on sigma = 2: identity and swap. Unsatisfiable.
LabelCover conflict_label_cover();
/// One right vertex with `neighbors` left neighbors, sigma = 1.
LabelCover star_label_cover(int neighbors);
/// One right vertex, three left neighbors, identity projections on sigma = 2.
LabelCover satisfiable_star_label_cover();
/// One right vertex, three distinct left neighbors on sigma = 2 with
/// projections constant-0, constant-1 and identity. Unsatisfiable, value 2/3.
LabelCover conflicting_star_label_cover();
/// One left and one right vertex joined by two edges with constant projections
/// 0 and 1 on sigma = 2. Value 1/2.
LabelCover split_label_cover();

}  // namespace vecpack::fixtures
