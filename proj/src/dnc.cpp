#include "obdd/dnc.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "obdd/subsets.hpp"

namespace obdd {

namespace {

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

void check_level(const DncLevel& level) {
    if (level.k < 1) throw std::invalid_argument("dnc level: k must be >= 1");
    if (static_cast<int>(level.alphas.size()) != level.k)
        throw std::invalid_argument("dnc level: expected " + std::to_string(level.k) + " alphas");
    double prev = 0.0;
    for (double a : level.alphas) {
        if (!(a > prev && a < 1.0))
            throw std::invalid_argument("dnc level: alphas must be strictly increasing in (0, 1)");
        prev = a;
    }
}

// Adaptive variant: keeps the longest strictly increasing prefix that stays
// below n'; may return fewer than level.k sizes, or none at all.
std::vector<int> fit_split_sizes(const DncLevel& level, int n_prime) {
    std::vector<int> sizes;
    int prev = 0;
    for (double a : level.alphas) {
        const int s = std::max(prev + 1, round_half_up(a * n_prime));
        if (s >= n_prime) break;
        sizes.push_back(s);
        prev = s;
    }
    return sizes;
}

struct Ctx {
    DiagramKind kind;
    SearchMode mode;
    double epsilon;
    bool memoize;
    DncStats* stats;
    const std::vector<DncLevel>* levels = nullptr;  // for the built-in chain
};

FsState run_level(Ctx& ctx, int level_idx, const DncLevel& level, const SubSolver& sub,
                  const FsState& prefix_state, std::uint32_t j_mask);

// Sub-solver for composition level `level_idx` (0 = plain sweep).
FsState chain_sub(Ctx& ctx, int level_idx, const FsState& state, std::uint32_t j_mask) {
    if (level_idx == 0) return fs_star(state, j_mask, ctx.kind);
    const DncLevel& level = (*ctx.levels)[static_cast<std::size_t>(level_idx - 1)];
    SubSolver deeper = [&ctx, level_idx](const FsState& s, std::uint32_t j) {
        return chain_sub(ctx, level_idx - 1, s, j);
    };
    return run_level(ctx, level_idx, level, deeper, state, j_mask);
}

FsState run_level(Ctx& ctx, int level_idx, const DncLevel& level, const SubSolver& sub,
                  const FsState& prefix_state, std::uint32_t j_mask) {
    const int n_prime = std::popcount(j_mask);
    const std::vector<int> sizes = fit_split_sizes(level, n_prime);
    if (sizes.empty())  // sub-universe too small to split: exact sweep
        return fs_star(prefix_state, j_mask, ctx.kind);

    // Stage-1 base: every state of rank s1 inside J.
    auto base = fs_star_truncated(prefix_state, j_mask, sizes.front(), ctx.kind);
    const std::vector<int> j_elems = mask_elements(j_mask);

    std::unordered_map<std::uint64_t, FsState> memo;  // (mask, t) -> state

    // dnc(L, t): best state covering prefix + L using stages 1..t.
    std::function<FsState(std::uint32_t, int)> dnc = [&](std::uint32_t l_mask,
                                                         int t) -> FsState {
        if (t == 1) return base.at(l_mask);
        const std::uint64_t memo_key =
            (static_cast<std::uint64_t>(t) << 32) | l_mask;
        if (ctx.memoize) {
            auto it = memo.find(memo_key);
            if (it != memo.end()) {
                if (ctx.stats) ++ctx.stats->state_cache_hits;
                return it->second;
            }
        }
        if (ctx.stats) ++ctx.stats->states_computed;

        const std::vector<int> l_elems = mask_elements(l_mask);
        const int nl = static_cast<int>(l_elems.size());
        const int ks = sizes[static_cast<std::size_t>(t - 2)];
        const std::uint64_t domain = binomial(nl, ks);

        // The key function stashes the best candidate state as a side effect
        // so the winner is not recomputed; the stash mirrors find_min's
        // smallest-index tie-break.
        FsState best;
        std::uint64_t best_key = 0;
        bool have_best = false;
        auto key = [&](std::uint64_t idx) -> std::uint64_t {
            const std::uint32_t kmask =
                spread_mask(combination_unrank(idx, nl, ks), l_elems);
            FsState k_state = dnc(kmask, t - 1);
            FsState full = sub(k_state, l_mask & ~kmask);
            const std::uint64_t cost = full.min_cost;
            if (!have_best || cost < best_key) {
                best = std::move(full);
                best_key = cost;
                have_best = true;
            }
            return cost;
        };
        MinResult mr = find_min(domain, key, ctx.mode, ctx.epsilon);
        if (ctx.stats) {
            ctx.stats->find_mins.push_back({"L" + std::to_string(level_idx) + ".t" +
                                                std::to_string(t),
                                            mr.stats.domain_size, mr.stats.classical_evals,
                                            mr.stats.quantum_query_bound});
            ctx.stats->total_classical_evals += mr.stats.classical_evals;
            ctx.stats->total_quantum_query_bound += mr.stats.quantum_query_bound;
        }
        if (ctx.memoize) memo.emplace(memo_key, best);
        return best;
    };

    return dnc(j_mask, static_cast<int>(sizes.size()) + 1);
}

void check_config(const TruthTable& f, const DncConfig& config) {
    if (config.levels.empty()) throw std::invalid_argument("dnc: at least one level required");
    for (const auto& level : config.levels) check_level(level);
    const DncLevel& outer = config.levels.back();
    if (!(outer.alphas.front() < 1.0 / 3.0))
        throw std::invalid_argument("dnc: outermost alpha_1 must be < 1/3");
    split_sizes(outer, f.var_count());  // strict validation of the user config
    if (config.epsilon && !(*config.epsilon > 0.0 && *config.epsilon < 1.0))
        throw std::invalid_argument("dnc: epsilon must be in (0, 1)");
    if (f.var_count() > kMaxSweepVariables)
        throw std::invalid_argument("dnc: n exceeds the DP cap of " +
                                    std::to_string(kMaxSweepVariables));
}

DncResult run(const TruthTable& f, const DncConfig& config) {
    check_config(f, config);
    DncResult result;
    result.stats.epsilon = config.epsilon.value_or(std::exp2(-f.var_count()));
    Ctx ctx{config.kind, config.mode, result.stats.epsilon, config.memoize, &result.stats,
            &config.levels};
    const std::uint32_t all = (std::uint32_t{1} << f.var_count()) - 1;
    FsState root = initial_state(f);
    result.state = chain_sub(ctx, static_cast<int>(config.levels.size()), root, all);
    return result;
}

}  // namespace

std::vector<int> split_sizes(const DncLevel& level, int n_prime) {
    check_level(level);
    if (n_prime < 2) throw std::invalid_argument("split_sizes: n' must be >= 2");
    std::vector<int> sizes = fit_split_sizes(level, n_prime);
    if (static_cast<int>(sizes.size()) != level.k)
        throw std::invalid_argument(
            "split_sizes: rounding collapse, cannot fit " + std::to_string(level.k) +
            " strictly increasing sizes below " + std::to_string(n_prime));
    return sizes;
}

DncResult opt_obdd(const TruthTable& f, const DncConfig& config) {
    if (config.levels.size() != 1)
        throw std::invalid_argument("opt_obdd: exactly one level expected");
    return run(f, config);
}

DncResult opt_obdd_composed(const TruthTable& f, const DncConfig& config) {
    return run(f, config);
}

FsState compose_step(const FsState& prefix_state, std::uint32_t j_mask, const DncLevel& level,
                     const SubSolver& sub, DiagramKind kind, SearchMode mode, double epsilon,
                     DncStats* stats, bool memoize) {
    check_level(level);
    Ctx ctx{kind, mode, epsilon, memoize, stats, nullptr};
    return run_level(ctx, 1, level, sub, prefix_state, j_mask);
}

}  // namespace obdd
