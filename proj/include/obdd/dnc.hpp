#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "obdd/fs_engine.hpp"
#include "obdd/qsearch.hpp"

// Divide-and-conquer minimization. A level (k, alphas) splits the work into
// k+1 stages: precompute all states of rank s1 = round(alpha_1 * n'), then at
// stage t search for the best K of size s_{t-1} inside L, recursing on K and
// finishing L \ K with the sub-solver. The search identity guarantees the
// stage minimum equals the single-block optimum, so every configuration is
// exact; the parameters only shape the query counts.
//
// levels[0] is the innermost level (its sub-solver is the plain subset
// sweep); each following level wraps the previous one. Inner levels re-derive
// split sizes from their own alphas and the current sub-universe size |J|,
// clamping the number of splits when |J| is too small to fit all k (and
// falling back to the exact sweep when no split fits); the user-facing
// outermost level is validated strictly instead.

namespace obdd {

struct DncLevel {
    int k = 1;
    std::vector<double> alphas;
};

struct DncConfig {
    std::vector<DncLevel> levels;
    DiagramKind kind = DiagramKind::obdd;
    SearchMode mode = SearchMode::classical;
    std::optional<double> epsilon;  // default 2^-n
    bool memoize = true;
};

struct FindMinRecord {
    std::string stage;  // "L<level>.t<stage>"
    std::uint64_t domain_size = 0;
    std::uint64_t classical_evals = 0;
    std::uint64_t quantum_query_bound = 0;
};

struct DncStats {
    std::vector<FindMinRecord> find_mins;
    std::uint64_t total_classical_evals = 0;
    std::uint64_t total_quantum_query_bound = 0;
    std::uint64_t states_computed = 0;   // recursive states evaluated
    std::uint64_t state_cache_hits = 0;  // served from the subset-state cache
    double epsilon = 0.0;
};

struct DncResult {
    FsState state;
    DncStats stats;
};

// Split sizes round(alpha_j * n') (half-up), bumped upward to be strictly
// increasing; throws std::invalid_argument when the chain cannot stay below
// n' ("rounding collapse").
std::vector<int> split_sizes(const DncLevel& level, int n_prime);

// Single level. config.levels must have exactly one entry.
DncResult opt_obdd(const TruthTable& f, const DncConfig& config);

// Full composition; the last level runs on ([n], empty prefix).
DncResult opt_obdd_composed(const TruthTable& f, const DncConfig& config);

// One wrap step, exposed for tests: runs `level` over (prefix_state, J) with
// `sub` finishing the top block of each candidate split. `sub` must return
// the state for its (state, J') arguments exactly (the plain sweep qualifies).
using SubSolver = std::function<FsState(const FsState&, std::uint32_t)>;
FsState compose_step(const FsState& prefix_state, std::uint32_t j_mask, const DncLevel& level,
                     const SubSolver& sub, DiagramKind kind, SearchMode mode, double epsilon,
                     DncStats* stats = nullptr, bool memoize = true);

}  // namespace obdd
