#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vecpack/caps.hpp"
#include "vecpack/graph.hpp"

namespace vecpack {

using Hyperedge = std::vector<Vertex>;  // sorted, distinct, nonempty

/// Hypergraph on vertices 0..n-1. Edges are sorted internally and the edge
/// list is kept sorted and duplicate-free.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Throws std::invalid_argument on empty edges, repeated vertices inside
    /// an edge or out-of-range vertices. Duplicate edges are merged.
    Hypergraph(int n, std::vector<Hyperedge> edges);

    int n() const { return n_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    /// Size of every edge when the hypergraph is uniform, else nullopt.
    std::optional<int> uniformity() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<Hyperedge> edges_;
};

/// Normalizes a vertex list into an edge (sort + unique) without validation
/// of the surrounding hypergraph.
Hyperedge make_edge(std::vector<Vertex> vertices);

struct ColorCheck {
    bool proper = true;   // no monochromatic edge
    int balance = 0;      // max multiplicity of one color inside one edge
    bool rainbow = true;  // every edge sees all k colors
};

/// Throws std::invalid_argument on a wrong length or a color outside [0, k).
ColorCheck color_check(const Hypergraph& h, int k, const Coloring& c);

enum class ColoringMode { Proper, Balanced, Rainbow, TwoColor };

struct ColoringGoal {
    ColoringMode mode = ColoringMode::Proper;
    int balance = 0;  // Balanced only: per-edge multiplicity bound

    static ColoringGoal proper() { return {ColoringMode::Proper, 0}; }
    static ColoringGoal balanced(int c) { return {ColoringMode::Balanced, c}; }
    static ColoringGoal rainbow() { return {ColoringMode::Rainbow, 0}; }
    static ColoringGoal two_color() { return {ColoringMode::TwoColor, 0}; }
};

/// Backtracking search for a k-coloring meeting `goal` (TwoColor ignores k
/// and uses 2). Returns nullopt only after an exhaustive search; throws
/// CapExceeded when caps.coloring_nodes is reached first.
std::optional<Coloring> solve_coloring(const Hypergraph& h, int k, ColoringGoal goal,
                                       const SearchCaps& caps = {});

/// Row-major indexing of [k]^n with 0-based values: x <-> sum x_i k^(n-1-i).
class Cube {
public:
    /// Throws CapExceeded when k^n > max_vertices, std::invalid_argument on
    /// k < 1 or n < 0.
    Cube(int k, int n, std::uint64_t max_vertices);

    int k() const { return k_; }
    int n() const { return n_; }
    int size() const { return size_; }
    std::vector<int> decode(int index) const;
    int encode(const std::vector<int>& x) const;
    /// x_i for vertex `index`, without materializing the vector.
    int coord(int index, int i) const;

private:
    int k_;
    int n_;
    int size_;
    std::vector<int> stride_;
};

/// H_r^n[k]: vertices [k]^n, one edge per set of k distinct vectors whose
/// per-coordinate counts of missing values sum to at most r.
Hypergraph gen_H_r_n_k(int k, int n, int r, const SearchCaps& caps = {});

/// f : [k]^n -> {0,1} as a full truth table, indexed like Cube.
struct TruthTableFn {
    int k = 0;
    int n = 0;
    std::vector<std::uint8_t> table;

    /// Throws std::invalid_argument if the table length is not k^n or a
    /// value is not 0/1.
    void validate() const;
    friend bool operator==(const TruthTableFn&, const TruthTableFn&) = default;
};

struct OneFixingWitness {
    int coordinate = 0;  // l
    int zero_value = 0;  // alpha: f = 0 whenever x_l = alpha
    int one_value = 0;   // beta:  f = 1 whenever x_l = beta

    friend bool operator==(const OneFixingWitness&, const OneFixingWitness&) = default;
};

struct GadgetReport {
    bool two_coloring_property = false;
    bool one_fixing = false;
    std::optional<OneFixingWitness> witness;  // lexicographically first
    /// When the property fails: at most 2k distinct inputs sharing one output
    /// value that cover [k] in every coordinate (repeat any to reach 2k).
    std::vector<int> monochromatic_cover;
};

/// Exhaustive check of the two-coloring property and of 1-fixing. Throws
/// CapExceeded past caps.gadget_nodes.
GadgetReport gadget_check(const TruthTableFn& f, const SearchCaps& caps = {});

}  // namespace vecpack
