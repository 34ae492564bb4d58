#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vecpack/caps.hpp"
#include "vecpack/embed.hpp"
#include "vecpack/graph.hpp"
#include "vecpack/hypergraph.hpp"
#include "vecpack/instance.hpp"
#include "vecpack/labelcover.hpp"
#include "vecpack/rational.hpp"
#include "vecpack/setsys.hpp"

namespace vecpack {

/// Checked record of a reduction's two directions on one input.
///
/// completeness: a witness for the YES side was built, pushed through the
/// reduction and re-validated on the target; achieved_value is its target
/// objective (bins, makespan, covering parts, or edge balance).
///
/// soundness: the target optimum from an exact oracle. For coloring targets
/// bound_value is 1 when the target coloring exists and 0 when exhaustive
/// search ruled it out. `exhaustive` is false whenever an oracle hit a cap.
struct GapCertificate {
    struct Completeness {
        bool witness_present = false;
        Rational achieved_value;
        friend bool operator==(const Completeness&, const Completeness&) = default;
    };
    struct Soundness {
        bool exhaustive = false;
        Rational bound_value;
        friend bool operator==(const Soundness&, const Soundness&) = default;
    };

    std::string reduction_name;
    Completeness completeness;
    Soundness soundness;
    std::map<std::string, std::string> parameters;

    friend bool operator==(const GapCertificate&, const GapCertificate&) = default;
};

// ---- set cover -> vector bin packing -------------------------------------

struct SetCoverToVbp {
    PackingInstance instance;
    FullEmbedding embedding;
};

/// Jobs are the embedding images f(v) of the elements.
SetCoverToVbp setcover_to_vbp(const SetSystem& s);
GapCertificate certify_setcover_to_vbp(const SetSystem& s, const SetCoverToVbp& r, const SearchCaps& caps = {});

// ---- monochromatic clique -> vector scheduling ----------------------------

struct MonoCliqueToVs {
    PackingInstance instance;
    std::vector<std::vector<Vertex>> cliques;  // coordinate j <-> cliques[j]
    bool degenerate = false;                   // no B-clique: one all-zero coordinate
};

/// Coordinate j of job i is 1 iff vertex i lies in the j-th B-clique
/// (lexicographic order); k machines. Throws std::invalid_argument for
/// B < 2 or k < 1.
MonoCliqueToVs monoclique_to_vs(const Graph& g, int k, int b, const SearchCaps& caps = {});
GapCertificate certify_monoclique_to_vs(const Graph& g, int k, int b, const MonoCliqueToVs& r,
                                        const SearchCaps& caps = {});

// ---- lexicographic amplification ------------------------------------------

/// G^C. Throws std::invalid_argument unless C is a power of two >= 2 and
/// CapExceeded past caps.product_vertices.
Graph lex_amplify(const Graph& g, int c, const SearchCaps& caps = {});
/// Checks chi(G^C) <= chi(G)^C through the product coloring and, when the
/// oracles fit, m(G^C, k) >= m(G, k)^C.
GapCertificate certify_lex_amplify(const Graph& g, int c, int k, const Graph& amplified,
                                   const SearchCaps& caps = {});

// ---- balanced hypergraph coloring -> vector scheduling ---------------------

struct IncidenceInstance {
    PackingInstance instance;
    bool degenerate = false;  // no edges: one all-zero coordinate
};

/// Job per vertex, coordinate per edge, k machines.
IncidenceInstance bhc_to_vs(const Hypergraph& h, int k);
/// `balance` defaults to ceil(s/k) for an s-uniform H.
GapCertificate certify_bhc_to_vs(const Hypergraph& h, int k, const IncidenceInstance& r,
                                 std::optional<int> balance = std::nullopt, const SearchCaps& caps = {});

// ---- label cover -> balanced hypergraph coloring ---------------------------

struct LabelCoverToBhc {
    Hypergraph hypergraph;
    int k = 0;
    int cloud_size = 0;  // k^|Sigma_L|; vertex (v, x) is v * cloud_size + x
    std::uint64_t candidates_examined = 0;
};

bool is_odd_prime(int k);

/// Long code per left vertex. For each right vertex u, each k-subset of its
/// edges with distinct left endpoints, and each choice of k distinct vectors
/// per edge obeying the per-color bound 2k under every consistent label
/// tuple, one k^2-edge. Throws std::invalid_argument unless k is an odd
/// prime, CapExceeded past the cube, edge or candidate caps.
LabelCoverToBhc labelcover_to_bhc(const LabelCover& lc, int k, const SearchCaps& caps = {});
/// c(v, x) = x_{sigma(v)} for the cloud of left vertex v.
Coloring dictator_coloring_bhc(const LabelCover& lc, const LabelCoverToBhc& r, const Labeling& sigma);
GapCertificate certify_labelcover_to_bhc(const LabelCover& lc, const LabelCoverToBhc& r,
                                         const SearchCaps& caps = {});

// ---- label cover -> rainbow coloring ---------------------------------------

struct LabelCoverToRainbow {
    Hypergraph hypergraph;         // H2, over master nodes
    int k = 0;
    int cloud_size = 0;            // node (w, x) is w * cloud_size + x, w in L then R
    std::vector<int> master_of;    // node -> index of its master in H2
    std::size_t unfolded_edges = 0;
};

/// Which vector sets of one cloud become edges. Both require every
/// coordinate to take all k values.
enum class RainbowEdgeRule {
    /// Supports of 2k-vector collections with repetition: every covering set
    /// of at most 2k distinct vectors. This is what the gadget argument needs.
    UpTo2k,
    /// Exactly 2k distinct vectors.
    Exactly2k,
};

/// Clouds for L and R, covering vector sets as edges, then the equality
/// folding x in K_u ~ y in K_v when x_i = y_{pi(i)}. Masters are numbered by
/// smallest member. Throws std::invalid_argument when sigma_left !=
/// sigma_right or k < 3.
LabelCoverToRainbow labelcover_to_rainbow(const LabelCover& lc, int k, const SearchCaps& caps = {},
                                          RainbowEdgeRule rule = RainbowEdgeRule::UpTo2k);
/// Dictator coloring of H2 from a labeling; throws VerificationFailure when
/// a folded component receives two colors.
Coloring dictator_coloring_rainbow(const LabelCover& lc, const LabelCoverToRainbow& r, const Labeling& sigma);
GapCertificate certify_labelcover_to_rainbow(const LabelCover& lc, const LabelCoverToRainbow& r,
                                             const SearchCaps& caps = {});

// ---- 3-SAT -> label cover ---------------------------------------------------

/// completeness: when the best labeling has value 1, the variable labels
/// satisfy the formula. soundness: the exact Label Cover value.
GapCertificate certify_threesat_to_labelcover(const Cnf& formula, const LabelCover& lc,
                                              const SearchCaps& caps = {});

// ---- rainbow coloring -> vector bin covering --------------------------------

/// Job per vertex, coordinate per edge. Throws std::invalid_argument on an
/// edgeless hypergraph.
PackingInstance rainbow_to_vbc(const Hypergraph& h);
GapCertificate certify_rainbow_to_vbc(const Hypergraph& h, int k, const PackingInstance& instance,
                                      const SearchCaps& caps = {});

}  // namespace vecpack
