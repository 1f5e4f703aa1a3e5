#include "obdd/fs_engine.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "obdd/parallel.hpp"
#include "obdd/subsets.hpp"

namespace obdd {

std::uint32_t FsState::folded_mask() const {
    std::uint32_t m = 0;
    for (int v : pi_folded) m |= 1u << (v - 1);
    return m;
}

std::uint32_t FsState::unfolded_mask() const {
    const std::uint32_t all = (n == 32) ? 0xffffffffu : (1u << n) - 1;
    return all & ~folded_mask();
}

std::uint64_t FsState::cost_of_last_levels(int levels) const {
    if (levels < 0 || levels > static_cast<int>(fold_increments.size()))
        throw std::out_of_range("cost_of_last_levels: bad level count");
    std::uint64_t sum = 0;
    for (std::size_t i = fold_increments.size() - static_cast<std::size_t>(levels);
         i < fold_increments.size(); ++i)
        sum += fold_increments[i];
    return sum;
}

std::string FsState::dump_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["prefix_blocks"] = prefix_blocks;
    j["pi_folded"] = pi_folded;
    j["min_cost"] = min_cost;
    j["fold_increments"] = fold_increments;
    j["table_cells"] = table.size();
    return j.dump();
}

FsState initial_state(const TruthTable& f) {
    FsState s;
    s.n = f.var_count();
    s.table.resize(f.size());
    for (std::uint64_t b = 0; b < f.size(); ++b)
        s.table[b] = f.bit(b) ? kTerminalT : kTerminalF;
    return s;
}

FsState fold(const FsState& s, int k, DiagramKind kind) {
    if (k < 1 || k > s.n) throw std::invalid_argument("fold: variable out of range");
    const std::uint32_t kbit = 1u << (k - 1);
    if (!(s.unfolded_mask() & kbit))
        throw std::invalid_argument("fold: x" + std::to_string(k) + " already folded");

    // Bit position of k inside the packed residual index.
    const int pos = std::popcount(s.unfolded_mask() & (kbit - 1));
    const std::uint64_t low_mask = (std::uint64_t{1} << pos) - 1;

    FsState out;
    out.n = s.n;
    out.prefix_blocks = s.prefix_blocks;
    out.prefix_blocks.push_back(kbit);
    out.pi_folded = s.pi_folded;
    out.pi_folded.push_back(k);
    out.min_cost = s.min_cost;
    out.table.resize(s.table.size() / 2);

    std::uint64_t created = 0;
    for (std::uint64_t b = 0; b < out.table.size(); ++b) {
        const std::uint64_t idx0 = (b & low_mask) | ((b & ~low_mask) << 1);
        const std::uint32_t u0 = s.table[idx0];
        const std::uint32_t u1 = s.table[idx0 | (std::uint64_t{1} << pos)];
        if (kind == DiagramKind::obdd ? (u0 == u1) : (u1 == kTerminalF)) {
            out.table[b] = u0;
            continue;
        }
        const std::uint64_t key = (static_cast<std::uint64_t>(u1) << 32) | u0;
        auto [it, fresh] = out.node_map.try_emplace(key, 0);
        if (fresh) {
            it->second = static_cast<std::uint32_t>(out.min_cost) + 2;
            ++out.min_cost;
            ++created;
        }
        out.table[b] = it->second;
    }
    out.fold_increments = s.fold_increments;
    out.fold_increments.push_back(created);
    return out;
}

namespace {

void check_sweep_args(const FsState& s, std::uint32_t j_mask) {
    if (j_mask == 0) throw std::invalid_argument("subset sweep: J must be nonempty");
    if (s.n > kMaxSweepVariables)
        throw std::invalid_argument("subset sweep: n exceeds the DP cap of " +
                                    std::to_string(kMaxSweepVariables));
    if (j_mask & ~s.unfolded_mask())
        throw std::invalid_argument("subset sweep: J overlaps folded variables or exceeds n");
}

// One rank-by-rank sweep. Returns the map at rank `stop_rank`.
std::unordered_map<std::uint32_t, FsState> sweep(const FsState& s, std::uint32_t j_mask,
                                                 int stop_rank, DiagramKind kind) {
    const std::vector<int> elems = mask_elements(j_mask);
    const int nj = static_cast<int>(elems.size());

    std::unordered_map<std::uint32_t, FsState> prev;
    prev.emplace(0u, s);
    prev.at(0u).prefix_blocks = s.prefix_blocks;  // rank 0 = untouched input

    for (int rank = 1; rank <= stop_rank; ++rank) {
        const std::vector<std::uint32_t> compressed = ksubsets(nj, rank);
        std::vector<FsState> winners(compressed.size());
        std::vector<std::uint32_t> masks(compressed.size());
        parallel_for(compressed.size(), [&](std::size_t i) {
            const std::uint32_t kmask = spread_mask(compressed[i], elems);
            masks[i] = kmask;
            std::optional<FsState> best;
            for (std::uint32_t rest = kmask; rest;) {
                const int k = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                const FsState& parent = prev.at(kmask & ~(1u << (k - 1)));
                FsState cand = fold(parent, k, kind);
                if (!best || cand.min_cost < best->min_cost) best = std::move(cand);
            }
            // Relabel the freshly folded singletons as the single block K.
            best->prefix_blocks = s.prefix_blocks;
            best->prefix_blocks.push_back(kmask);
            winners[i] = std::move(*best);
        });
        std::unordered_map<std::uint32_t, FsState> cur;
        cur.reserve(winners.size());
        for (std::size_t i = 0; i < winners.size(); ++i) cur.emplace(masks[i], std::move(winners[i]));
        prev = std::move(cur);
    }
    return prev;
}

}  // namespace

FsState fs_star(const FsState& s, std::uint32_t j_mask, DiagramKind kind) {
    check_sweep_args(s, j_mask);
    auto final_rank = sweep(s, j_mask, std::popcount(j_mask), kind);
    return std::move(final_rank.at(j_mask));
}

std::unordered_map<std::uint32_t, FsState> fs_star_truncated(const FsState& s,
                                                             std::uint32_t j_mask, int rank,
                                                             DiagramKind kind) {
    check_sweep_args(s, j_mask);
    if (rank < 0 || rank > std::popcount(j_mask))
        throw std::invalid_argument("fs_star_truncated: rank out of range");
    return sweep(s, j_mask, rank, kind);
}

FsResult min_obdd_fs(const TruthTable& f, DiagramKind kind) {
    FsState s0 = initial_state(f);
    const std::uint32_t all = (std::uint32_t{1} << f.var_count()) - 1;
    FsState full = fs_star(s0, all, kind);
    return {VariableOrder::from_pi(full.pi_folded), full.min_cost, full.fold_increments};
}

}  // namespace obdd
