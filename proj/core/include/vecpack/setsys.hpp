#pragma once

#include <optional>
#include <vector>

namespace vecpack {

using Element = int;
using ElementSet = std::vector<Element>;  // sorted, distinct

/// A family of distinct subsets of the universe {0, ..., universe_size-1}.
/// Sets are stored sorted and the family itself is kept in lexicographic
/// order, so equal families compare equal.
class SetSystem {
public:
    SetSystem() = default;
    /// Throws std::invalid_argument on out-of-range or duplicate elements and
    /// on duplicate sets.
    SetSystem(int universe_size, std::vector<ElementSet> sets);

    int universe_size() const { return n_; }
    const std::vector<ElementSet>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    int n_ = 0;
    std::vector<ElementSet> sets_;
};

struct SetSystemStats {
    bool simple = true;   // pairwise intersections have at most one element
    int k = 0;            // largest set
    int delta = 0;        // largest element degree
    bool nontrivial = false;  // every element lies in some set
    bool downward_closed = false;
};

SetSystemStats analyze(const SetSystem& s);

/// Sorts and deduplicates; the argument order does not matter.
ElementSet make_set(std::vector<Element> elements);

bool is_subset(const ElementSet& a, const ElementSet& b);
std::size_t intersection_size(const ElementSet& a, const ElementSet& b);

/// Membership of `t` in the downward closure of `s`. With `excluded_core` and
/// `size_cap` both given, additionally accepts every t that avoids the core
/// and has at most `size_cap` elements (the augmented family used when a
/// bouquet is embedded on its own). Throws std::invalid_argument on an
/// element outside the universe.
bool in_downward_closure(const SetSystem& s, const ElementSet& t,
                         const std::optional<ElementSet>& excluded_core = std::nullopt,
                         std::optional<int> size_cap = std::nullopt);

/// Both sunflower-bouquet axioms for core `u`, plus coverage of every core
/// element. Throws std::invalid_argument when `u` is empty.
bool is_sunflower_bouquet(const SetSystem& s, const ElementSet& u);

struct BouquetPart {
    ElementSet core;
    SetSystem family;  // the sets that meet `core`
};

struct BouquetDecomposition {
    std::vector<BouquetPart> parts;
    int colors_used = 0;
    int conflict_max_degree = 0;
};

/// Conflict graph on elements: u ~ v when some sets S1 ∋ u, S2 ∋ v intersect
/// (S1 = S2 allowed). Returned as sorted adjacency lists.
std::vector<std::vector<Element>> conflict_graph(const SetSystem& s);

/// Greedy-colors the conflict graph in ascending element order and returns
/// one certified bouquet per color class. Requires a simple, nontrivial
/// family with k >= 2; throws std::invalid_argument otherwise.
BouquetDecomposition decompose(const SetSystem& s);

}  // namespace vecpack
