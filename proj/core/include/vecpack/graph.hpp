#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vecpack/caps.hpp"

namespace vecpack {

using Vertex = int;
using Coloring = std::vector<int>;  // vertex -> color

/// Simple undirected graph on vertices 0..n-1. Edges are stored as sorted
/// (u < v) pairs in lexicographic order.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    bool adjacent(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }

    /// Adjacency as bit masks; throws std::invalid_argument when n > 64.
    std::vector<std::uint64_t> masks() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

Graph complement(const Graph& g);

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Largest clique (vertices ascending); n <= 64.
std::vector<Vertex> max_clique(const Graph& g);

struct GraphInvariants {
    int omega = 0;
    int alpha = 0;
    int chi = 0;
    std::vector<Vertex> max_clique;
    std::vector<Vertex> max_independent_set;
    Coloring optimal_coloring;
    /// n < C(alpha + omega, omega): the Erdos-Szekeres bound, true for all graphs.
    bool ramsey_ok = false;
};

/// Exact clique, independence and chromatic numbers with witnesses.
/// Throws CapExceeded above caps.graph_vertices.
GraphInvariants invariants(const Graph& g, const SearchCaps& caps = {});

/// Proper coloring with colors 0..k-1, or nullopt when none exists. A maximum
/// clique is pre-colored 0, 1, ... to break color symmetry.
std::optional<Coloring> k_colorable(const Graph& g, int k, const SearchCaps& caps = {});

/// G . H: (u1,v1) ~ (u2,v2) iff u1 ~ u2 in G, or u1 = u2 and v1 ~ v2 in H.
/// Vertex (u, v) is numbered u * |V(H)| + v.
Graph lex_product(const Graph& g, const Graph& h);

/// G^p for p a power of two >= 2, by repeated squaring G^2 = G . G.
/// Throws std::invalid_argument otherwise.
Graph lex_power(const Graph& g, int p);

/// Color of (u, v) in G . H is c_g(u) * k_h + c_h(v); proper whenever both
/// inputs are.
Coloring lex_product_coloring(const Coloring& cg, const Coloring& ch, int k_h);

bool is_power_of_two(long p);

/// Largest clique inside one color class. Throws on colors outside [0, k).
int max_mono_clique(const Graph& g, int k, const Coloring& c);

struct MonoCliqueResult {
    int value = 0;
    Coloring best_coloring;
};

/// min over all k-colorings of the largest monochromatic clique.
/// Throws CapExceeded above caps.mono_vertices / caps.mono_colors.
MonoCliqueResult minimax_mono_clique(const Graph& g, int k, const SearchCaps& caps = {});

/// When k(B-1) >= n the round-robin coloring i -> i mod k leaves every
/// color class smaller than B, so no monochromatic B-clique exists; that
/// coloring is returned. Otherwise nullopt (undecided).
std::optional<Coloring> trivial_mc_decision(int n, int k, int b);

/// All cliques with exactly b vertices, each ascending, in lexicographic
/// order. Throws CapExceeded past caps.cliques.
std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int b, const SearchCaps& caps = {});

}  // namespace vecpack
