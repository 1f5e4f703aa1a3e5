#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "obdd/diagram.hpp"
#include "obdd/truth_table.hpp"

// Exact minimization core: dynamic programming over subsets of variables.
//
// A state is the partially built diagram after folding (reading bottom-up)
// the variables in pi_folded, together with the minimum node count over all
// orders realizing the state's block structure. Folding variable k halves
// the table: each remaining cell pairs its k=0 and k=1 sub-cells, applies the
// kind's skip rule, and otherwise reuses or creates a node at the new level.
// The minimum over all n-variable fold sequences is the optimal diagram size;
// the subset sweep computes it in sum_k 2^(n-k)*C(n,k) = 3^n cell steps.

namespace obdd {

struct FsState {
    int n = 0;  // ambient variable count

    // Block structure <I1, ..., Im> as variable masks; the realized fold
    // order finishes each block before starting the next.
    std::vector<std::uint32_t> prefix_blocks;

    // Variables folded so far, level 1 first.
    std::vector<int> pi_folded;

    // Nodes created so far == number of refs issued (refs 2..min_cost+1).
    std::uint64_t min_cost = 0;

    // Refs of the residual subfunctions, one cell per assignment to the
    // unfolded variables; the smallest unfolded variable is the index LSB.
    std::vector<std::uint32_t> table;

    // (lo, hi) -> ref for nodes at the topmost folded level only; reset on
    // every fold.
    std::unordered_map<std::uint64_t, std::uint32_t> node_map;

    // Nodes created by each fold, aligned with pi_folded.
    std::vector<std::uint64_t> fold_increments;

    std::uint32_t folded_mask() const;
    std::uint32_t unfolded_mask() const;
    int folded_count() const { return static_cast<int>(pi_folded.size()); }

    // Sum of the last `levels` fold increments (cost contributed by the most
    // recent block of that many variables).
    std::uint64_t cost_of_last_levels(int levels) const;

    // Debug dump: prefix blocks, pi_folded, min_cost, increments, table size.
    std::string dump_json() const;
};

// State for the empty prefix: table = raw truth table bits, nothing folded.
FsState initial_state(const TruthTable& f);

// Folds variable k (which must be unfolded). Appends k as its own block.
FsState fold(const FsState& s, int k, DiagramKind kind);

// Subset sweep over J (disjoint from the folded set): for each rank l and
// each l-subset K of J, keeps the cheapest fold extension; ranks below l-1
// are discarded as the sweep advances. Returns the state for the full block
// J appended to s's prefix. Ties between extension variables go to the
// smallest variable index. Subsets within a rank may be processed in
// parallel (capped by OBDD_THREADS).
FsState fs_star(const FsState& s, std::uint32_t j_mask, DiagramKind kind);

// Same sweep stopped at rank `rank`; returns every state of that rank keyed
// by its subset mask (subsets of j_mask).
std::unordered_map<std::uint32_t, FsState> fs_star_truncated(const FsState& s,
                                                             std::uint32_t j_mask, int rank,
                                                             DiagramKind kind);

struct FsResult {
    VariableOrder order;  // realizing order (pi convention: level 1 first)
    std::uint64_t min_cost = 0;
    std::vector<std::uint64_t> per_level_costs;  // aligned with levels 1..n
};

// Full minimization of f: sweep over all n variables from the empty state.
FsResult min_obdd_fs(const TruthTable& f, DiagramKind kind);

// Exact DP methods are capped tighter than the truth-table limit: the live
// ranks of the sweep need ~C(n, n/3) * 2^(2n/3) table cells.
inline constexpr int kMaxSweepVariables = 18;

}  // namespace obdd
