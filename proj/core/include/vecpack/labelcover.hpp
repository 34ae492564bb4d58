#pragma once

#include <vector>

#include "vecpack/caps.hpp"
#include "vecpack/rational.hpp"

namespace vecpack {

using Label = int;

/// Constraint on edge (u, v): a labeling satisfies it when pi[label(u)] == label(v).
struct LcEdge {
    int u = 0;  // left vertex
    int v = 0;  // right vertex
    std::vector<Label> pi;  // Sigma_L -> Sigma_R

    friend auto operator<=>(const LcEdge&, const LcEdge&) = default;
};

/// Bipartite Label Cover instance. Parallel edges are allowed; the edge list
/// is kept sorted.
class LabelCover {
public:
    LabelCover() = default;
    /// Throws std::invalid_argument on out-of-range endpoints or labels, a
    /// projection of the wrong length, or sigma_left < sigma_right.
    LabelCover(int left, int right, int sigma_left, int sigma_right, std::vector<LcEdge> edges);

    int left() const { return left_; }
    int right() const { return right_; }
    int sigma_left() const { return sigma_left_; }
    int sigma_right() const { return sigma_right_; }
    const std::vector<LcEdge>& edges() const { return edges_; }

    /// Edge indices incident to each right vertex, in edge order.
    std::vector<std::vector<int>> right_incidence() const;
    std::vector<std::vector<int>> left_incidence() const;
    int max_right_degree() const;

    friend bool operator==(const LabelCover&, const LabelCover&) = default;

private:
    int left_ = 0;
    int right_ = 0;
    int sigma_left_ = 1;
    int sigma_right_ = 1;
    std::vector<LcEdge> edges_;
};

struct Labeling {
    std::vector<Label> left;
    std::vector<Label> right;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Fraction of satisfied edges; 1 for an instance without edges. Throws
/// std::invalid_argument on a labeling of the wrong shape.
Rational evaluate(const LabelCover& lc, const Labeling& labeling);

struct BestLabeling {
    Rational value;
    Labeling witness;  // lexicographically least optimum (right labels first)
};

/// Exact optimum: every right labeling, then the best label per left vertex.
/// Throws CapExceeded when |Sigma_R|^R * (L * Sigma_L + |E|) exceeds
/// caps.labeling_work.
BestLabeling best_labeling(const LabelCover& lc, const SearchCaps& caps = {});

struct Literal {
    int var = 0;
    bool negated = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct Cnf {
    int variables = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const Cnf&, const Cnf&) = default;
};

bool satisfies(const Cnf& formula, const std::vector<bool>& assignment);

/// Clause-variable game. Left vertex = clause, labeled by one of its 7
/// satisfying assignments (bit j of the mask is the value of the clause's
/// j-th variable, masks ascending). Right vertex = variable, labeled 0/1.
/// Throws std::invalid_argument unless every clause has exactly 3 distinct
/// in-range variables.
LabelCover threesat_to_labelcover(const Cnf& formula);

/// The satisfying masks of a 3-literal clause, ascending.
std::vector<int> satisfying_masks(const Clause& clause);

}  // namespace vecpack
