#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obdd/truth_table.hpp"

// Reduced ordered decision diagrams over a fixed variable order.
//
// Level convention: levels run 1..n bottom-up. The variable at level n is
// read FIRST (root); the variable at level 1 is read LAST (adjacent to the
// terminals). A VariableOrder stores pi with pi[1] = read-last variable, and
// converts to/from the everyday read-first-to-last listing.
//
// Node references: 0 is the F terminal, 1 is the T terminal, nonterminal
// refs start at 2 and are issued in creation order (bottom level first).

namespace obdd {

enum class DiagramKind { obdd, zdd };

inline const char* kind_name(DiagramKind k) { return k == DiagramKind::obdd ? "obdd" : "zdd"; }

class VariableOrder {
public:
    // pi[0] in the input vector is the level-1 (read-last) variable.
    static VariableOrder from_pi(std::vector<int> pi);
    // Input lists variables read-first to read-last; stored reversed.
    static VariableOrder from_read_order(std::vector<int> order);

    int size() const { return static_cast<int>(pi_.size()); }
    int var_at_level(int level) const { return pi_[static_cast<std::size_t>(level - 1)]; }
    int level_of(int var) const { return inv_[static_cast<std::size_t>(var - 1)]; }
    const std::vector<int>& pi() const { return pi_; }
    std::vector<int> read_order() const { return {pi_.rbegin(), pi_.rend()}; }

    bool operator==(const VariableOrder& o) const { return pi_ == o.pi_; }

private:
    explicit VariableOrder(std::vector<int> pi);
    std::vector<int> pi_;   // pi_[level-1] = variable at that level
    std::vector<int> inv_;  // inv_[var-1] = level of that variable
};

inline constexpr std::uint32_t kTerminalF = 0;
inline constexpr std::uint32_t kTerminalT = 1;

struct DiagramNode {
    int level;         // 1..n
    std::uint32_t lo;  // 0-successor
    std::uint32_t hi;  // 1-successor
};

struct Diagram {
    DiagramKind kind;
    VariableOrder order;
    std::vector<DiagramNode> nodes;  // nodes[r-2] is the node with ref r
    std::uint32_t root = kTerminalF;
    std::vector<std::uint64_t> widths;  // widths[level-1] = node count at that level

    std::uint64_t nonterminals() const { return nodes.size(); }
    // Terminals that appear in the DAG (as the root or as a successor).
    int reachable_terminals() const;
    std::uint64_t total_size() const { return nonterminals() + reachable_terminals(); }

    const DiagramNode& node(std::uint32_t ref) const { return nodes[ref - 2]; }
    bool is_terminal(std::uint32_t ref) const { return ref < 2; }
};

// Builds the fully reduced diagram bottom-up: one halving pass per level over
// the order-permuted table, merging equal (lo, hi) pairs within the level and
// applying the kind's skip rule (obdd: lo == hi; zdd: hi == F).
Diagram build_diagram(const TruthTable& f, const VariableOrder& order, DiagramKind kind);

// Width at the level where variable var sits.
std::uint64_t level_width(const Diagram& d, int var);

// Follows the diagram on a full assignment. For zdd, a level skipped by an
// edge means that variable's 1-branch was suppressed: any such variable set
// to 1 forces the value 0.
int evaluate(const Diagram& d, std::uint32_t point);

// Graphviz text. Both terminals are always declared (boxes labeled F and T);
// nonterminals are declared root level first; each nonterminal emits its
// 0-edge dotted and its 1-edge solid.
std::string export_dot(const Diagram& d);

// One-line JSON summary: {"kind", "order_read_first_to_last",
// "widths_root_to_bottom", "nonterminals", "total"}.
std::string summary_json(const Diagram& d);

// Reduction-rule audit used by tests: no within-level duplicate (lo, hi), no
// obdd node with lo == hi, no zdd node with hi == F, all refs in range and
// pointing strictly downward.
bool is_reduced(const Diagram& d, std::string* why = nullptr);

// Renumbers refs by (level descending, creation order) and serializes; two
// diagrams are isomorphic iff their canonical keys match.
std::string canonical_key(const Diagram& d);

}  // namespace obdd
