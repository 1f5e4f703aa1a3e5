#include "obdd/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace obdd {

VariableOrder::VariableOrder(std::vector<int> pi) : pi_(std::move(pi)) {
    const int n = static_cast<int>(pi_.size());
    if (n < 1 || n > kMaxVariables) throw std::invalid_argument("VariableOrder: bad size");
    inv_.assign(static_cast<std::size_t>(n), 0);
    for (int lvl = 1; lvl <= n; ++lvl) {
        int v = pi_[static_cast<std::size_t>(lvl - 1)];
        if (v < 1 || v > n) throw std::invalid_argument("VariableOrder: variable out of range");
        if (inv_[static_cast<std::size_t>(v - 1)] != 0)
            throw std::invalid_argument("VariableOrder: duplicate variable x" + std::to_string(v));
        inv_[static_cast<std::size_t>(v - 1)] = lvl;
    }
}

VariableOrder VariableOrder::from_pi(std::vector<int> pi) { return VariableOrder(std::move(pi)); }

VariableOrder VariableOrder::from_read_order(std::vector<int> order) {
    std::reverse(order.begin(), order.end());
    return VariableOrder(std::move(order));
}

int Diagram::reachable_terminals() const {
    bool seen[2] = {false, false};
    if (is_terminal(root)) seen[root] = true;
    for (const auto& nd : nodes) {
        if (nd.lo < 2) seen[nd.lo] = true;
        if (nd.hi < 2) seen[nd.hi] = true;
    }
    return (seen[0] ? 1 : 0) + (seen[1] ? 1 : 0);
}

Diagram build_diagram(const TruthTable& f, const VariableOrder& order, DiagramKind kind) {
    const int n = f.var_count();
    if (order.size() != n)
        throw std::invalid_argument("build_diagram: order size " + std::to_string(order.size()) +
                                    " does not match n=" + std::to_string(n));

    // Permute rows so the level-l variable occupies bit l-1; each halving pass
    // then pairs adjacent cells.
    std::vector<std::uint32_t> cur(f.size());
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int lvl = 1; lvl <= n; ++lvl)
        shift[static_cast<std::size_t>(lvl - 1)] = order.var_at_level(lvl) - 1;
    for (std::uint64_t b = 0; b < f.size(); ++b) {
        std::uint64_t idx = 0;
        for (int l = 0; l < n; ++l)
            idx |= ((b >> shift[static_cast<std::size_t>(l)]) & 1u) << l;
        cur[idx] = f.bit(b) ? kTerminalT : kTerminalF;
    }

    Diagram d{kind, order, {}, kTerminalF, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    std::unordered_map<std::uint64_t, std::uint32_t> level_map;
    for (int lvl = 1; lvl <= n; ++lvl) {
        const std::size_t half = cur.size() / 2;
        level_map.clear();
        std::vector<std::uint32_t> next(half);
        for (std::size_t j = 0; j < half; ++j) {
            std::uint32_t u0 = cur[2 * j], u1 = cur[2 * j + 1];
            if (kind == DiagramKind::obdd ? (u0 == u1) : (u1 == kTerminalF)) {
                next[j] = u0;
                continue;
            }
            std::uint64_t key = (static_cast<std::uint64_t>(u1) << 32) | u0;
            auto [it, fresh] = level_map.try_emplace(key, 0);
            if (fresh) {
                it->second = static_cast<std::uint32_t>(d.nodes.size()) + 2;
                d.nodes.push_back({lvl, u0, u1});
                ++d.widths[static_cast<std::size_t>(lvl - 1)];
            }
            next[j] = it->second;
        }
        cur = std::move(next);
    }
    d.root = cur[0];
    return d;
}

std::uint64_t level_width(const Diagram& d, int var) {
    if (var < 1 || var > d.order.size())
        throw std::invalid_argument("level_width: variable out of range");
    return d.widths[static_cast<std::size_t>(d.order.level_of(var) - 1)];
}

int evaluate(const Diagram& d, std::uint32_t point) {
    std::uint32_t cur = d.root;
    for (int lvl = d.order.size(); lvl >= 1; --lvl) {
        const bool bit = (point >> (d.order.var_at_level(lvl) - 1)) & 1u;
        if (!d.is_terminal(cur) && d.node(cur).level == lvl)
            cur = bit ? d.node(cur).hi : d.node(cur).lo;
        else if (d.kind == DiagramKind::zdd && bit)
            return 0;
    }
    return cur == kTerminalT ? 1 : 0;
}

namespace {

// Nonterminal refs ordered for output: root level first, then creation order.
std::vector<std::uint32_t> display_order(const Diagram& d) {
    std::vector<std::uint32_t> refs(d.nodes.size());
    for (std::size_t i = 0; i < refs.size(); ++i) refs[i] = static_cast<std::uint32_t>(i) + 2;
    std::stable_sort(refs.begin(), refs.end(), [&](std::uint32_t a, std::uint32_t b) {
        return d.node(a).level > d.node(b).level;
    });
    return refs;
}

}  // namespace

std::string export_dot(const Diagram& d) {
    std::ostringstream out;
    out << "digraph " << kind_name(d.kind) << " {\n";
    out << "  rankdir=TB;\n";
    out << "  n0 [shape=box, label=\"F\"];\n";
    out << "  n1 [shape=box, label=\"T\"];\n";
    const auto refs = display_order(d);
    for (auto r : refs)
        out << "  n" << r << " [shape=circle, label=\"x" << d.order.var_at_level(d.node(r).level)
            << "\"];\n";
    for (auto r : refs) {
        out << "  n" << r << " -> n" << d.node(r).lo << " [style=dotted];\n";
        out << "  n" << r << " -> n" << d.node(r).hi << " [style=solid];\n";
    }
    out << "}\n";
    return out.str();
}

std::string summary_json(const Diagram& d) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(d.kind);
    j["order_read_first_to_last"] = d.order.read_order();
    std::vector<std::uint64_t> w(d.widths.rbegin(), d.widths.rend());
    j["widths_root_to_bottom"] = w;
    j["nonterminals"] = d.nonterminals();
    j["total"] = d.total_size();
    return j.dump();
}

bool is_reduced(const Diagram& d, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const std::uint32_t limit = static_cast<std::uint32_t>(d.nodes.size()) + 2;
    if (d.root >= limit) return fail("root ref out of range");
    std::unordered_map<std::uint64_t, int> seen;  // (level, lo, hi) -> count
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& nd = d.nodes[i];
        const std::uint32_t ref = static_cast<std::uint32_t>(i) + 2;
        if (nd.level < 1 || nd.level > d.order.size()) return fail("node level out of range");
        if (nd.lo >= limit || nd.hi >= limit) return fail("successor ref out of range");
        for (std::uint32_t s : {nd.lo, nd.hi})
            if (s >= 2 && d.node(s).level >= nd.level) return fail("successor not strictly lower");
        if (d.kind == DiagramKind::obdd && nd.lo == nd.hi)
            return fail("obdd node " + std::to_string(ref) + " with equal successors");
        if (d.kind == DiagramKind::zdd && nd.hi == kTerminalF)
            return fail("zdd node " + std::to_string(ref) + " with hi = F");
        std::uint64_t key = (static_cast<std::uint64_t>(nd.level) << 48) ^
                            (static_cast<std::uint64_t>(nd.hi) << 24) ^ nd.lo;
        if (++seen[key] > 1) return fail("duplicate (level, lo, hi) triple");
    }
    return true;
}

std::string canonical_key(const Diagram& d) {
    const auto refs = display_order(d);
    std::vector<std::uint32_t> rename(d.nodes.size() + 2);
    rename[0] = 0;
    rename[1] = 1;
    for (std::size_t i = 0; i < refs.size(); ++i) rename[refs[i]] = static_cast<std::uint32_t>(i) + 2;
    std::ostringstream out;
    out << kind_name(d.kind) << ";root=" << rename[d.root] << ";";
    for (auto r : refs) {
        const auto& nd = d.node(r);
        out << nd.level << ":" << rename[nd.lo] << ":" << rename[nd.hi] << ";";
    }
    return out.str();
}

}  // namespace obdd
