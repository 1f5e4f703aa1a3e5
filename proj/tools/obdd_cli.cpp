// Command-line front end: minimize | solve-params | verify | parse.
// Exit codes: 0 success, 1 usage or configuration error, 2 verification
// failure, 3 parameter-solver divergence.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "obdd/diagram.hpp"
#include "obdd/dnc.hpp"
#include "obdd/expr.hpp"
#include "obdd/fs_engine.hpp"
#include "obdd/oracle.hpp"
#include "obdd/params.hpp"
#include "obdd/subsets.hpp"
#include "obdd/truth_table.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

obdd::DiagramKind parse_kind(const std::string& s) {
    if (s == "obdd") return obdd::DiagramKind::obdd;
    if (s == "zdd") return obdd::DiagramKind::zdd;
    throw CLI::ValidationError("--kind must be obdd or zdd");
}

struct MinimizeArgs {
    std::string input, expr, preset, dot_path;
    int n = 0;
    std::string method = "fs";
    std::string kind = "obdd";
    std::string mode = "classical";
    int k = 0;
    std::vector<double> alphas;
    std::optional<double> epsilon;
};

obdd::DncConfig make_dnc_config(const MinimizeArgs& a) {
    obdd::DncConfig cfg;
    cfg.kind = parse_kind(a.kind);
    cfg.mode = a.mode == "qsim" ? obdd::SearchMode::simulated_quantum
                                : obdd::SearchMode::classical;
    cfg.epsilon = a.epsilon;
    if (!a.preset.empty()) {
        if (a.k != 0 || !a.alphas.empty())
            throw CLI::ValidationError("--preset excludes --k/--alpha");
        if (a.preset.rfind("table1-k", 0) == 0) {
            const int k = std::stoi(a.preset.substr(8));
            const auto& rows = obdd::table1_rows();
            if (k < 1 || k > static_cast<int>(rows.size()))
                throw CLI::ValidationError("preset row out of range: " + a.preset);
            cfg.levels.push_back({k, rows[static_cast<std::size_t>(k - 1)].alphas});
        } else if (a.preset.rfind("table2-chain", 0) == 0) {
            const int len = std::stoi(a.preset.substr(12));
            const auto& rows = obdd::table2_rows();
            if (len < 1 || len > static_cast<int>(rows.size()))
                throw CLI::ValidationError("preset chain length out of range: " + a.preset);
            for (int i = 0; i < len; ++i)
                cfg.levels.push_back({rows[static_cast<std::size_t>(i)].k,
                                      rows[static_cast<std::size_t>(i)].alphas});
        } else {
            throw CLI::ValidationError("unknown preset: " + a.preset);
        }
    } else {
        if (a.k < 1 || a.alphas.empty())
            throw CLI::ValidationError("dnc needs --k and --alpha (or --preset)");
        cfg.levels.push_back({a.k, a.alphas});
    }
    return cfg;
}

ordered_json stats_json(const obdd::DncStats& st, const std::string& mode) {
    ordered_json j;
    j["mode"] = mode;
    j["epsilon"] = st.epsilon;
    ordered_json fm = ordered_json::array();
    for (const auto& r : st.find_mins)
        fm.push_back({{"stage", r.stage},
                      {"N", r.domain_size},
                      {"classical_evals", r.classical_evals},
                      {"quantum_query_bound", r.quantum_query_bound}});
    j["find_mins"] = fm;
    j["totals"] = {{"find_min_calls", st.find_mins.size()},
                   {"classical_evals", st.total_classical_evals},
                   {"quantum_query_bound", st.total_quantum_query_bound}};
    j["states_computed"] = st.states_computed;
    j["state_cache_hits"] = st.state_cache_hits;
    return j;
}

int cmd_minimize(const MinimizeArgs& a) {
    obdd::TruthTable f = [&] {
        if (!a.input.empty() && !a.expr.empty())
            throw CLI::ValidationError("--input and --expr are mutually exclusive");
        if (!a.input.empty()) return obdd::load_table(a.input);
        if (a.expr.empty()) throw CLI::ValidationError("one of --input/--expr is required");
        if (a.n < 1) throw CLI::ValidationError("--expr requires --n");
        return obdd::parse_expression(a.expr, a.n);
    }();
    const auto kind = parse_kind(a.kind);

    const auto t0 = std::chrono::steady_clock::now();
    obdd::VariableOrder order = obdd::VariableOrder::from_pi([&] {
        std::vector<int> id(static_cast<std::size_t>(f.var_count()));
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i) + 1;
        return id;
    }());
    std::uint64_t min_cost = 0;
    ordered_json stats;

    if (a.method == "fs") {
        obdd::FsResult r = obdd::min_obdd_fs(f, kind);
        order = r.order;
        min_cost = r.min_cost;
        stats = {{"sweep_cells", obdd::sweep_work(f.var_count()).total}};
    } else if (a.method == "dnc") {
        obdd::DncResult r = obdd::opt_obdd_composed(f, make_dnc_config(a));
        order = obdd::VariableOrder::from_pi(r.state.pi_folded);
        min_cost = r.state.min_cost;
        stats = stats_json(r.stats, a.mode);
    } else if (a.method == "brute") {
        obdd::BruteForceResult r = obdd::brute_force_min(f, kind);
        order = r.best.order;
        min_cost = r.best.nonterminals;
        stats = {{"orders_scanned", [&] {
                      std::uint64_t fact = 1;
                      for (int i = 2; i <= f.var_count(); ++i) fact *= i;
                      return fact;
                  }()},
                 {"minimizers", r.minimizers}};
    } else {
        throw CLI::ValidationError("--method must be fs, dnc or brute");
    }

    obdd::Diagram d = obdd::build_diagram(f, order, kind);
    const auto t1 = std::chrono::steady_clock::now();
    if (d.nonterminals() != min_cost)
        throw std::logic_error("internal inconsistency: rebuilt diagram size " +
                               std::to_string(d.nonterminals()) + " != reported min_cost " +
                               std::to_string(min_cost));
    if (!a.dot_path.empty()) {
        std::ofstream out(a.dot_path);
        if (!out) throw std::runtime_error("cannot write " + a.dot_path);
        out << obdd::export_dot(d);
    }

    ordered_json report;
    report["method"] = a.method;
    report["kind"] = a.kind;
    report["order_read_first_to_last"] = order.read_order();
    report["order_pi_read_last_to_first"] = order.pi();
    report["min_cost"] = min_cost;
    report["total_size"] = d.total_size();
    report["widths_root_to_bottom"] =
        std::vector<std::uint64_t>(d.widths.rbegin(), d.widths.rend());
    report["stats"] = stats;
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << report.dump(2) << "\n";
    return 0;
}

void print_solutions(const std::vector<obdd::ParamSolution>& sols) {
    std::printf("%3s  %-10s  %-10s", "k", "gamma_in", "beta");
    std::size_t max_k = 0;
    for (const auto& s : sols) max_k = std::max(max_k, s.alphas.size());
    for (std::size_t i = 1; i <= max_k; ++i) std::printf("  %-10s", ("alpha_" + std::to_string(i)).c_str());
    std::printf("\n");
    for (const auto& s : sols) {
        std::printf("%3d  %-10s  %-10s", s.k, fmt6(s.gamma_in).c_str(), fmt6(s.beta_out).c_str());
        for (double a : s.alphas) std::printf("  %-10s", fmt6(a).c_str());
        std::printf("\n");
    }
    // JSON with the same 6-digit rendering.
    std::string j = "{\"solutions\":[";
    for (std::size_t i = 0; i < sols.size(); ++i) {
        const auto& s = sols[i];
        if (i) j += ",";
        j += "{\"k\":" + std::to_string(s.k) + ",\"gamma_in\":" + fmt6(s.gamma_in) +
             ",\"beta\":" + fmt6(s.beta_out) + ",\"alphas\":[";
        for (std::size_t t = 0; t < s.alphas.size(); ++t) {
            if (t) j += ",";
            j += fmt6(s.alphas[t]);
        }
        j += "],\"max_residual\":";
        double mr = 0;
        for (double r : s.residuals) mr = std::max(mr, std::fabs(r));
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", mr);
        j += buf;
        j += "}";
    }
    j += "]}";
    std::printf("%s\n", j.c_str());
}

int cmd_solve_params(int k, double gamma, int chain) {
    if (chain > 0) {
        print_solutions(obdd::composition_chain(k, gamma, chain));
    } else {
        print_solutions({obdd::solve_system(k, gamma)});
    }
    return 0;
}

int cmd_parse(const std::string& expr, int n, const std::string& out_path) {
    obdd::TruthTable f = obdd::parse_expression(expr, n);
    obdd::save_table(f, out_path);
    ordered_json j;
    j["n"] = n;
    j["cells"] = f.size();
    j["path"] = out_path;
    std::cout << j.dump() << "\n";
    return 0;
}

// Randomized cross-checks; returns the number of mismatches found.
int verify_trials(int n, int trials, std::uint64_t seed, const std::string& kind_arg) {
    std::vector<obdd::DiagramKind> kinds;
    if (kind_arg == "both" || kind_arg == "obdd") kinds.push_back(obdd::DiagramKind::obdd);
    if (kind_arg == "both" || kind_arg == "zdd") kinds.push_back(obdd::DiagramKind::zdd);
    if (kinds.empty()) throw CLI::ValidationError("--kind must be obdd, zdd or both");

    int failures = 0;
    auto fail = [&](const std::string& what, std::uint64_t s) {
        std::cerr << "MISMATCH (seed " << s << "): " << what << "\n";
        ++failures;
    };

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        obdd::TruthTable f = obdd::random_table(n, s);
        for (auto kind : kinds) {
            obdd::FsResult fs = obdd::min_obdd_fs(f, kind);

            // Rebuild and functional equivalence.
            obdd::Diagram d = obdd::build_diagram(f, fs.order, kind);
            if (d.nonterminals() != fs.min_cost)
                fail("rebuilt diagram size != sweep min_cost", s);
            const std::uint64_t step = f.size() > 4096 ? f.size() / 4096 : 1;
            for (std::uint64_t p = 0; p < f.size(); p += step)
                if (obdd::evaluate(d, static_cast<std::uint32_t>(p)) !=
                    obdd::evaluate(f, static_cast<std::uint32_t>(p))) {
                    fail("diagram evaluation differs from table at point " + std::to_string(p), s);
                    break;
                }

            // Exhaustive reference when affordable.
            if (n <= 7) {
                auto bf = obdd::brute_force_min(f, kind);
                if (bf.best.nonterminals != fs.min_cost)
                    fail("brute force disagrees with the sweep", s);
            }

            // Divide-and-conquer agreement (classical and accounting modes).
            obdd::DncConfig cfg;
            cfg.kind = kind;
            cfg.levels.push_back({1, {0.274863}});
            auto d1 = obdd::opt_obdd(f, cfg);
            if (d1.state.min_cost != fs.min_cost) fail("dnc k=1 disagrees with the sweep", s);
            cfg.mode = obdd::SearchMode::simulated_quantum;
            auto d2 = obdd::opt_obdd(f, cfg);
            if (d2.state.min_cost != fs.min_cost) fail("dnc qsim disagrees with classical", s);

            // Split identity at a random cut size.
            std::uint32_t all = (std::uint32_t{1} << n) - 1;
            const int cut = 1 + static_cast<int>(s % static_cast<std::uint64_t>(n - 1));
            std::uint64_t best = ~std::uint64_t{0};
            auto states = obdd::fs_star_truncated(obdd::initial_state(f), all, cut, kind);
            for (const auto& [mask, st] : states) {
                std::uint64_t c = obdd::fs_star(st, all & ~mask, kind).min_cost;
                best = std::min(best, c);
            }
            if (best != fs.min_cost)
                fail("split identity violated at cut " + std::to_string(cut), s);
        }
    }
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact OBDD/ZDD minimization via the subset-fold sweep and its "
                 "divide-and-conquer search"};
    app.require_subcommand(1);

    MinimizeArgs ma;
    auto* minimize = app.add_subcommand("minimize", "Minimize diagram size for a function");
    minimize->add_option("--input", ma.input, "Truth-table file");
    minimize->add_option("--expr", ma.expr, "Boolean expression over x1..xn");
    minimize->add_option("--n", ma.n, "Variable count for --expr");
    minimize->add_option("--method", ma.method, "fs | dnc | brute")->capture_default_str();
    minimize->add_option("--kind", ma.kind, "obdd | zdd")->capture_default_str();
    minimize->add_option("--mode", ma.mode, "classical | qsim")->capture_default_str();
    minimize->add_option("--k", ma.k, "Split count for dnc");
    minimize->add_option("--alpha", ma.alphas, "Split fractions a1,a2,...")->delimiter(',');
    minimize->add_option("--preset", ma.preset, "table1-k<K> or table2-chain<L>");
    double eps = 0.0;
    auto* eps_opt = minimize->add_option("--epsilon", eps, "Search failure budget (default 2^-n)");
    minimize->add_option("--dot", ma.dot_path, "Write the winning diagram as Graphviz text");

    int sp_k = 6, sp_chain = 0;
    double sp_gamma = 3.0;
    auto* solve = app.add_subcommand("solve-params", "Solve the split-fraction system");
    solve->add_option("--k", sp_k, "Number of split fractions")->capture_default_str();
    solve->add_option("--gamma", sp_gamma, "Sub-solver base (> 2)")->capture_default_str();
    solve->add_option("--chain", sp_chain, "Iterations of beta -> gamma feedback");

    int v_n = 6, v_trials = 20;
    std::uint64_t v_seed = 1;
    std::string v_kind = "both";
    auto* verify = app.add_subcommand("verify", "Randomized cross-checks");
    verify->add_option("--n", v_n, "Variable count")->capture_default_str();
    verify->add_option("--trials", v_trials, "Number of random functions")->capture_default_str();
    verify->add_option("--seed", v_seed, "Base seed")->capture_default_str();
    verify->add_option("--kind", v_kind, "obdd | zdd | both")->capture_default_str();

    std::string p_expr, p_out;
    int p_n = 0;
    auto* parse = app.add_subcommand("parse", "Evaluate an expression into a truth-table file");
    parse->add_option("--expr", p_expr, "Boolean expression")->required();
    parse->add_option("--n", p_n, "Variable count")->required();
    parse->add_option("--out", p_out, "Output path")->required();

    try {
        app.parse(argc, argv);
        if (eps_opt->count()) ma.epsilon = eps;
        if (minimize->parsed()) return cmd_minimize(ma);
        if (solve->parsed()) return cmd_solve_params(sp_k, sp_gamma, sp_chain);
        if (verify->parsed()) {
            const int bad = verify_trials(v_n, v_trials, v_seed, v_kind);
            if (bad) {
                std::cerr << bad << " mismatch(es)\n";
                return 2;
            }
            std::cout << "all checks passed (" << v_trials << " trials, n=" << v_n << ")\n";
            return 0;
        }
        if (parse->parsed()) return cmd_parse(p_expr, p_n, p_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const obdd::SolverError& e) {
        std::cerr << "solver divergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
