#pragma once

#include <cstdint>
#include <vector>

#include "obdd/diagram.hpp"
#include "obdd/truth_table.hpp"

// Ground-truth reference: enumerate every variable order, build each reduced
// diagram directly, take the minimum. Deliberately simple — this is the
// independent check the DP engine is measured against.
//
// Orders are enumerated as pi sequences (level 1 = read-last variable first)
// in lexicographic order; "first minimizer" means first in that enumeration.

namespace obdd {

struct OrderingReport {
    VariableOrder order;
    std::uint64_t nonterminals = 0;
    std::vector<std::uint64_t> widths;  // widths[level-1]
};

struct BruteForceResult {
    OrderingReport best;           // lexicographically first minimizer
    std::uint64_t minimizers = 0;  // how many orders attain the minimum
};

// n <= 9.
BruteForceResult brute_force_min(const TruthTable& f, DiagramKind kind);

// Complete cost map over all n! orders, in enumeration order. n <= 7.
std::vector<std::pair<VariableOrder, std::uint64_t>> enumerate_costs(const TruthTable& f,
                                                                     DiagramKind kind);

// Width at a single level from first principles, bypassing diagram
// construction: the number of distinct cofactors of f on the variables
// outside below|{var} that still depend on var (obdd) / have a nonzero
// var=1 half (zdd), viewed as functions of below|{var}.
std::uint64_t subfunction_width(const TruthTable& f, std::uint32_t below_mask, int var,
                                DiagramKind kind);

}  // namespace obdd
