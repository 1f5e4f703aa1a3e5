#include "obdd/params.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>

namespace obdd {

double binary_entropy(double delta) {
    if (delta < 0.0 || delta > 1.0)
        throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
    if (delta == 0.0 || delta == 1.0) return 0.0;
    return -delta * std::log2(delta) - (1.0 - delta) * std::log2(1.0 - delta);
}

double g_gamma(double x, double y, double gamma) {
    return (1.0 - y) + (y - x) * std::log2(gamma);
}

double f_gamma(double x, double y, double gamma) {
    return 0.5 * y * binary_entropy(x / y) + g_gamma(x, y, gamma);
}

namespace {

void check_alphas(int k, const std::vector<double>& alphas) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<int>(alphas.size()) != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " alphas");
    double prev = 0.0;
    for (double a : alphas) {
        if (!(a > prev && a < 1.0))
            throw std::invalid_argument("alphas must be strictly increasing inside (0, 1)");
        prev = a;
    }
}

void check_gamma(double gamma) {
    if (!(gamma > 2.0)) throw std::invalid_argument("gamma must be > 2");
}

constexpr double kChainBlowup = std::numeric_limits<double>::infinity();

// Forward chain from (a1, a2); returns a_{k+1}, or +/-inf when it leaves the
// valid corridor before reaching the end (sign encodes which side, which is
// what the bisection needs for steering).
double chain_tail(int k, double gamma, double a1, double a2, std::vector<double>* out) {
    if (out) {
        out->clear();
        out->push_back(a1);
        out->push_back(a2);
    }
    const double l2g = std::log2(gamma);
    double prev = a1, cur = a2;
    for (int j = 2; j <= k; ++j) {
        const double next = (f_gamma(prev, cur, gamma) - 1.0 + cur * l2g) / (l2g - 1.0);
        if (next <= cur) return -kChainBlowup;
        if (j < k && next >= 1.0) return kChainBlowup;
        if (out && j < k) out->push_back(next);
        prev = cur;
        cur = next;
    }
    return cur;  // this is a_{k+1}
}

double closing_residual(double a1, double ak, double gamma) {
    return (1.0 - a1) + binary_entropy(a1) - f_gamma(ak, 1.0, gamma);
}

// Bisection helper: first bracket by scanning `samples` points of [lo, hi]
// for a sign change of fn, then bisect. std::nullopt when no bracket exists.
std::optional<double> bracket_and_bisect(double lo, double hi, int samples,
                                         const std::function<double(double)>& fn) {
    double xa = 0.0, fa = 0.0, xb = 0.0;
    bool have_left = false, found = false;
    for (int i = 0; i <= samples; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / samples;
        const double fx = fn(x);
        if (std::isnan(fx)) {
            have_left = false;  // restart the scan past the invalid region
            continue;
        }
        if (have_left && (fa < 0.0) != (fx < 0.0)) {
            xb = x;
            found = true;
            break;
        }
        xa = x;
        fa = fx;
        have_left = true;
    }
    if (!found) return std::nullopt;
    for (int it = 0; it < 200 && xb - xa > 1e-16; ++it) {
        const double xm = 0.5 * (xa + xb);
        const double fm = fn(xm);
        if (std::isnan(fm)) return std::nullopt;
        if ((fa < 0.0) == (fm < 0.0)) {
            xa = xm;
            fa = fm;
        } else {
            xb = xm;
        }
    }
    return 0.5 * (xa + xb);
}

// For k >= 2: the alpha_2 that lands the forward chain exactly on
// a_{k+1} = 1, for the given alpha_1.
std::optional<double> inner_alpha2(int k, double gamma, double a1) {
    auto tail = [&](double a2) { return chain_tail(k, gamma, a1, a2, nullptr) - 1.0; };
    return bracket_and_bisect(a1 * (1.0 + 1e-12) + 1e-15, 1.0 - 1e-9, 512, tail);
}

}  // namespace

double recurrence_exponent(int k, const std::vector<double>& alphas, double gamma,
                           bool preprocess) {
    check_alphas(k, alphas);
    check_gamma(gamma);
    const double l2g = std::log2(gamma);
    if (!preprocess) {
        if (k != 1)
            throw std::invalid_argument("the no-preprocess variant is defined for k = 1 only");
        const double a = alphas[0];
        return 0.5 * binary_entropy(a) +
               std::max((1.0 - a) + a * l2g, (1.0 - a) * l2g);
    }
    const double a1 = alphas[0];
    const double pre = a1 < 1.0 / 3.0 ? (1.0 - a1) + binary_entropy(a1)
                                      : 2.0 / 3.0 + binary_entropy(1.0 / 3.0);
    double l = 0.0;
    for (int j = 1; j <= k; ++j) {
        const double aj = alphas[static_cast<std::size_t>(j - 1)];
        const double anext = (j == k) ? 1.0 : alphas[static_cast<std::size_t>(j)];
        l = 0.5 * anext * binary_entropy(aj / anext) + std::max(l, g_gamma(aj, anext, gamma));
    }
    return std::max(pre, l);
}

ParamSolution solve_system(int k, double gamma) {
    if (k < 1) throw std::invalid_argument("solve_system: k must be >= 1");
    check_gamma(gamma);

    const double lo = 1e-6, hi = 1.0 / 3.0 - 1e-6;
    auto outer = [&](double a1) -> double {
        if (k == 1) return closing_residual(a1, a1, gamma);
        auto a2 = inner_alpha2(k, gamma, a1);
        if (!a2) return std::numeric_limits<double>::quiet_NaN();
        std::vector<double> chain;
        chain_tail(k, gamma, a1, *a2, &chain);
        return closing_residual(a1, chain.back(), gamma);
    };

    auto root = bracket_and_bisect(lo, hi, 256, outer);
    if (!root) throw SolverError("solve_system: no root bracketed for alpha_1 in (0, 1/3)");

    ParamSolution sol;
    sol.k = k;
    sol.gamma_in = gamma;
    if (k == 1) {
        sol.alphas = {*root};
    } else {
        auto a2 = inner_alpha2(k, gamma, *root);
        if (!a2) throw SolverError("solve_system: inner chain lost its bracket at the root");
        chain_tail(k, gamma, *root, *a2, &sol.alphas);
    }

    sol.residuals.push_back(closing_residual(sol.alphas.front(), sol.alphas.back(), gamma));
    for (int j = 2; j <= k; ++j) {
        const double aj1 = sol.alphas[static_cast<std::size_t>(j - 2)];
        const double aj = sol.alphas[static_cast<std::size_t>(j - 1)];
        const double anext = (j == k) ? 1.0 : sol.alphas[static_cast<std::size_t>(j)];
        sol.residuals.push_back(f_gamma(aj1, aj, gamma) - g_gamma(aj, anext, gamma));
    }
    for (double r : sol.residuals)
        if (!(std::fabs(r) < 1e-9))
            throw SolverError("solve_system: residual " + std::to_string(r) +
                              " above tolerance; solution rejected");
    sol.beta_out = std::exp2(recurrence_exponent(k, sol.alphas, gamma));
    return sol;
}

std::vector<ParamSolution> composition_chain(int k, double gamma0, int iterations) {
    if (iterations < 1) throw std::invalid_argument("composition_chain: iterations must be >= 1");
    std::vector<ParamSolution> out;
    out.reserve(static_cast<std::size_t>(iterations));
    double gamma = gamma0;
    for (int i = 0; i < iterations; ++i) {
        out.push_back(solve_system(k, gamma));
        gamma = out.back().beta_out;
        if (!(gamma > 2.0))
            throw SolverError("composition_chain: beta fell to " + std::to_string(gamma));
    }
    return out;
}

const std::vector<PresetRow>& table1_rows() {
    static const std::vector<PresetRow> rows = {
        {1, 3.0, 2.97625, {0.274862}},
        {2, 3.0, 2.85690, {0.192754, 0.334571}},
        {3, 3.0, 2.83925, {0.184664, 0.205128, 0.342677}},
        {4, 3.0, 2.83744, {0.183859, 0.186017, 0.206375, 0.343503}},
        {5, 3.0, 2.83729, {0.183795, 0.183967, 0.186125, 0.206474, 0.343569}},
        {6, 3.0, 2.83728, {0.183791, 0.183802, 0.183974, 0.186131, 0.206480, 0.343573}},
    };
    return rows;
}

const std::vector<PresetRow>& table2_rows() {
    static const std::vector<PresetRow> rows = {
        {6, 3.0, 2.83728, {0.183792, 0.183802, 0.183974, 0.186132, 0.206480, 0.343573}},
        {6, 2.83728, 2.79364, {0.165753, 0.165759, 0.165857, 0.167339, 0.183883, 0.312741}},
        {6, 2.79364, 2.77981, {0.160487, 0.160491, 0.160574, 0.161890, 0.177376, 0.303603}},
        {6, 2.77981, 2.77521, {0.158777, 0.158780, 0.158859, 0.160124, 0.175273, 0.300622}},
        {6, 2.77521, 2.77366, {0.158203, 0.158207, 0.158284, 0.159532, 0.174568, 0.299621}},
        {6, 2.77366, 2.77313, {0.158009, 0.158013, 0.158089, 0.159332, 0.174330, 0.299282}},
        {6, 2.77313, 2.77295, {0.157943, 0.157947, 0.158023, 0.159264, 0.174249, 0.299166}},
        {6, 2.77295, 2.77289, {0.157920, 0.157924, 0.158000, 0.159241, 0.174221, 0.299127}},
        {6, 2.77289, 2.77287, {0.157913, 0.157916, 0.157992, 0.159233, 0.174212, 0.299114}},
        {6, 2.77287, 2.77286, {0.157910, 0.157914, 0.157990, 0.159230, 0.174208, 0.299109}},
    };
    return rows;
}

double closed_form_alpha_no_preprocess() {
    const double l23 = std::log2(3.0);
    return (l23 - 1.0) / (2.0 * l23 - 1.0);
}

double closed_form_base_no_preprocess() {
    return std::exp2(recurrence_exponent(1, {closed_form_alpha_no_preprocess()}, 3.0, false));
}

}  // namespace obdd
