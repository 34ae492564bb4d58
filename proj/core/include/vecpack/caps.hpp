#pragma once

#include <cstdint>

namespace vecpack {

/// Budgets for every exponential search in the library. Exceeding one raises
/// CapExceeded; nothing silently truncates.
struct SearchCaps {
    // graphs
    int graph_vertices = 20;         // invariants(), k_colorable()
    int mono_vertices = 10;          // minimax_mono_clique()
    int mono_colors = 3;
    // hypergraphs
    std::uint64_t coloring_nodes = 50'000'000;  // backtracking nodes in solve_coloring()
    std::uint64_t cube_vertices = 4096;         // k^n for long codes and H_r^n[k]
    std::uint64_t gadget_nodes = 50'000'000;
    std::uint64_t emitted_edges = 5'000'000;    // reduction outputs
    std::uint64_t construction_nodes = 200'000'000;  // candidate edges examined by reductions
    int product_vertices = 4096;                // lex_amplify output
    // label cover
    std::uint64_t labeling_work = 50'000'000;   // |Sigma_R|^R * L * Sigma_L
    // packing solvers
    int vbp_jobs = 15;
    int vs_jobs = 14;
    int vbc_jobs = 12;
    int setcover_universe = 20;
    std::uint64_t vs_nodes = 200'000'000;
    // clique enumeration inside monoclique_to_vs
    std::uint64_t cliques = 1'000'000;

    static SearchCaps defaults() { return {}; }
};

}  // namespace vecpack
