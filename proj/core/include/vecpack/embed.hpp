#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vecpack/rational.hpp"
#include "vecpack/setsys.hpp"

namespace vecpack {

/// Element -> point of [0,1]^K. A set T is accepted when the coordinate-wise
/// sum of its points has l_inf norm at most 1.
class Embedding {
public:
    Embedding() = default;
    /// rows[e] is the image of element e; all rows must have length `dim`.
    Embedding(std::size_t dim, std::vector<std::vector<Rational>> rows);

    std::size_t dim() const { return dim_; }
    std::size_t elements() const { return rows_.size(); }
    const std::vector<Rational>& operator[](Element e) const { return rows_.at(static_cast<std::size_t>(e)); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    /// ||sum_{e in t} f(e)||_inf
    Rational norm(const ElementSet& t) const;

    friend bool operator==(const Embedding&, const Embedding&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

/// 2 + 2k*delta + (k*delta)^2
std::size_t bouquet_embedding_dim(int k, int delta);

/// Embedding of a sunflower-bouquet `s` with core `u` whose acceptance region
/// is exactly the downward closure of `s` plus every set of at most k
/// elements avoiding `u`. Block layout: [f0 (2) | g (2k*delta) | g' ((k*delta)^2)].
///
/// Throws std::invalid_argument if `s` is not a bouquet with core `u`, k < 2,
/// a set has more than k elements or an element more than `delta` sets.
Embedding bouquet_embedding(const SetSystem& s, const ElementSet& u, int k, int delta);

/// f(v) = (f1(v), f2(v)). Throws std::invalid_argument on differing domains.
Embedding concat(const Embedding& a, const Embedding& b);

struct FullEmbedding {
    Embedding embedding;
    BouquetDecomposition decomposition;
    int k = 0;
    int delta = 0;
};

/// Embedding of the downward closure of a simple, nontrivial family with
/// k >= 2: one bouquet embedding per decomposition part, concatenated.
FullEmbedding full_embedding(const SetSystem& s);

struct EmbeddingCounterexample {
    ElementSet set;
    bool expected_member = false;
    Rational norm;

    friend bool operator==(const EmbeddingCounterexample&, const EmbeddingCounterexample&) = default;
};

struct VerificationReport {
    bool ok = true;
    std::vector<EmbeddingCounterexample> counterexamples;  // by size, then lexicographic
    std::size_t sets_checked = 0;
};

struct VerifyOptions {
    /// Check every subset of at most this many elements; defaults to k + 1.
    std::optional<int> size_cap;
    /// Target family is the downward closure of `s`, augmented (when set)
    /// with every set of at most `core_size_cap` elements avoiding this core.
    std::optional<ElementSet> excluded_core;
    std::optional<int> core_size_cap;
    /// Allow size_cap < k + 1, which does not cover all violations.
    bool force = false;
};

/// Compares norm acceptance with family membership on every small subset.
/// Checking up to k + 1 elements is complete for nonnegative embeddings:
/// norms are monotone in T, and every (k+1)-set lies outside the family.
VerificationReport verify_embedding(const SetSystem& s, const Embedding& f,
                                    const VerifyOptions& options = {});

}  // namespace vecpack
