#pragma once

#include <optional>
#include <vector>

#include "vecpack/graph.hpp"
#include "vecpack/instance.hpp"
#include "vecpack/labelcover.hpp"
#include "vecpack/rational.hpp"
#include "vecpack/reduce.hpp"
#include "vecpack/setsys.hpp"

// Brute-force reference implementations. They share no search code with the
// library solvers and are only meant for tiny inputs.
namespace vecpack::oracle {

/// Minimum number of bins over every set partition of the jobs.
int vbp(const PackingInstance& instance);

/// Minimum l_inf makespan over every machine assignment.
Rational vs(const PackingInstance& instance);

/// Maximum number of parts, each covering 1 in every coordinate, over every
/// set partition; 0 when the whole instance does not cover.
int vbc(const PackingInstance& instance);

/// Minimum number of sets covering the universe over every subfamily;
/// nullopt when no subfamily covers it.
std::optional<int> setcover(const SetSystem& s);

/// Whether some assignment satisfies the formula, by enumerating all of them.
bool satisfiable(const Cnf& formula);

/// Largest clique by subset enumeration (n <= 20).
int clique_number(const Graph& g);

/// Smallest k admitting a proper coloring, by enumerating all k^n colorings.
int chromatic_number(const Graph& g);

/// Largest monochromatic clique, minimized over every k-coloring.
int minimax_mono_clique(const Graph& g, int k);

/// Checks one hyperedge of a long-code BHC instance against the per-color
/// bound: the k^2 nodes must split into k clouds of k distinct vectors, and
/// for some right vertex adjacent to all clouds, every beta and every
/// preimage tuple (alpha_1..alpha_k) keeps each color count at most 2k.
bool lc_constraint_holds(const LabelCover& lc, int k, int cloud_size, const std::vector<int>& edge);

}  // namespace vecpack::oracle
