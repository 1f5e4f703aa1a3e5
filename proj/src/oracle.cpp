#include "obdd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace obdd {

BruteForceResult brute_force_min(const TruthTable& f, DiagramKind kind) {
    const int n = f.var_count();
    if (n > 9) throw std::invalid_argument("brute_force_min: n > 9");
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);

    Diagram d0 = build_diagram(f, VariableOrder::from_pi(pi), kind);
    BruteForceResult result{{d0.order, d0.nonterminals(), d0.widths}, 1};
    while (std::next_permutation(pi.begin(), pi.end())) {
        Diagram d = build_diagram(f, VariableOrder::from_pi(pi), kind);
        const std::uint64_t cost = d.nonterminals();
        if (cost < result.best.nonterminals) {
            result.best = {d.order, cost, d.widths};
            result.minimizers = 1;
        } else if (cost == result.best.nonterminals) {
            ++result.minimizers;
        }
    }
    return result;
}

std::vector<std::pair<VariableOrder, std::uint64_t>> enumerate_costs(const TruthTable& f,
                                                                     DiagramKind kind) {
    const int n = f.var_count();
    if (n > 7) throw std::invalid_argument("enumerate_costs: n > 7");
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<std::pair<VariableOrder, std::uint64_t>> out;
    do {
        auto order = VariableOrder::from_pi(pi);
        out.emplace_back(order, build_diagram(f, order, kind).nonterminals());
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

std::uint64_t subfunction_width(const TruthTable& f, std::uint32_t below_mask, int var,
                                DiagramKind kind) {
    const int n = f.var_count();
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    const std::uint32_t vbit = 1u << (var - 1);
    if (var < 1 || var > n || (below_mask & vbit) || (below_mask & ~all))
        throw std::invalid_argument("subfunction_width: bad (below, var)");

    std::vector<int> below, above;
    for (int i = 0; i < n; ++i) {
        if ((below_mask >> i) & 1u)
            below.push_back(i);
        else if (i != var - 1)
            above.push_back(i);
    }
    const int nb = static_cast<int>(below.size());
    const std::uint64_t sig_bits = std::uint64_t{1} << (nb + 1);  // low: below, top: var

    std::set<std::vector<std::uint64_t>> sigs;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << above.size()); ++a) {
        std::uint64_t base = 0;
        for (std::size_t i = 0; i < above.size(); ++i)
            if ((a >> i) & 1u) base |= std::uint64_t{1} << above[i];
        std::vector<std::uint64_t> sig((sig_bits + 63) / 64, 0);
        bool depends = false, hi_nonzero = false;
        for (std::uint64_t c = 0; c < sig_bits; ++c) {
            std::uint64_t idx = base;
            for (int i = 0; i < nb; ++i)
                if ((c >> i) & 1u) idx |= std::uint64_t{1} << below[static_cast<std::size_t>(i)];
            const bool vset = (c >> nb) & 1u;
            if (vset) idx |= vbit;
            const bool bit = f.bit(idx);
            if (bit) {
                sig[c >> 6] |= std::uint64_t{1} << (c & 63);
                if (vset) hi_nonzero = true;
            }
            if (vset && bit != f.bit(idx & ~std::uint64_t{vbit})) depends = true;
        }
        if (kind == DiagramKind::obdd ? depends : hi_nonzero) sigs.insert(std::move(sig));
    }
    return sigs.size();
}

}  // namespace obdd
