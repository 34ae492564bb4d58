#pragma once

#include <cstdint>
#include <vector>

#include "vecpack/caps.hpp"
#include "vecpack/instance.hpp"
#include "vecpack/setsys.hpp"

namespace vecpack::solve {

struct SolveResult {
    ObjectiveValue optimum;
    Assignment witness;        // packing problems
    std::vector<int> cover;    // set cover: chosen set indices, ascending
    bool exhaustive = false;   // true only for a completed exact search
    std::uint64_t nodes = 0;
};

enum class VbpMode { Exact, FirstFit, FirstFitDecreasing };
enum class VsMode { Exact, ListGreedy };
enum class VbcMode { Exact, Greedy };
enum class CoverMode { Exact, Greedy };

/// Exact: subset DP over feasible bins, at most caps.vbp_jobs jobs.
/// FirstFit places each job into the first bin that stays within 1;
/// FirstFitDecreasing does the same after sorting by largest coordinate.
SolveResult vbp(const PackingInstance& instance, VbpMode mode, const SearchCaps& caps = {});

/// Exact: branch and bound over machine assignments (first-use machine
/// order, input job order), returning the lexicographically least optimal
/// assignment. ListGreedy puts each job where the objective grows least.
SolveResult vs(const PackingInstance& instance, VsMode mode, Norm norm = Norm::infinity(),
               const SearchCaps& caps = {});

/// Maximum number of disjoint parts covering 1 in every coordinate;
/// leftover jobs join part 0. Value 0 when the whole set does not cover.
SolveResult vbc(const PackingInstance& instance, VbcMode mode, const SearchCaps& caps = {});

/// Minimum number of sets whose union is the universe. Throws
/// std::invalid_argument when some element lies in no set.
SolveResult setcover(const SetSystem& s, CoverMode mode, const SearchCaps& caps = {});

}  // namespace vecpack::solve
