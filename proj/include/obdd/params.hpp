#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Numerical side of the divide-and-conquer analysis: the recurrence exponent
// of the search with split fractions alpha_1 < ... < alpha_k and sub-solver
// base gamma, and the balancing system that picks the optimal fractions.
//
//   H(d)        = -d log2 d - (1-d) log2 (1-d), H(0) = H(1) = 0
//   g(x, y)     = (1-y) + (y-x) log2 gamma
//   f(x, y)     = y H(x/y) / 2 + g(x, y)
//   exponent    = max((1-a1) + H(a1), l_{k+1}), where l_1 = 0 and
//   l_{j+1}     = a_{j+1} H(a_j/a_{j+1}) / 2 + max(l_j, g(a_j, a_{j+1}))
//                 with a_{k+1} = 1.
// The balanced system solved here:
//   (1-a1) + H(a1) = f(a_k, 1)
//   f(a_{j-1}, a_j) = g(a_j, a_{j+1})   for j = 2..k, a_{k+1} = 1.

namespace obdd {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws outside [0, 1].
double binary_entropy(double delta);

double g_gamma(double x, double y, double gamma);
double f_gamma(double x, double y, double gamma);

// Base-2 exponent of the overall run time. alphas must be strictly
// increasing inside (0, 1), gamma > 2. `preprocess = false` selects the
// one-split variant without the precomputed base layer (k must be 1):
// H(a1)/2 + max((1-a1) + a1 log2 gamma, (1-a1) log2 gamma).
double recurrence_exponent(int k, const std::vector<double>& alphas, double gamma,
                           bool preprocess = true);

struct ParamSolution {
    int k = 0;
    double gamma_in = 0.0;
    std::vector<double> alphas;
    double beta_out = 0.0;          // 2^exponent at the solved alphas
    std::vector<double> residuals;  // closing equation first, then j = 2..k
};

// Solves the balanced system by outer bisection on alpha_1 in
// [1e-6, 1/3 - 1e-6] (<= 200 iterations, bracket found by grid scan); for
// k >= 2 an inner bisection on alpha_2 drives the closed-form forward chain
//   a_{j+1} = (f(a_{j-1}, a_j) - 1 + a_j log2 gamma) / (log2 gamma - 1)
// to land on a_{k+1} = 1. Throws SolverError when no bracket exists.
ParamSolution solve_system(int k, double gamma);

// Repeatedly feeds beta back in as the next gamma, starting from gamma0.
std::vector<ParamSolution> composition_chain(int k, double gamma0, int iterations);

// Published parameter tables (6-digit constants), used by the CLI presets
// and as the reference values the solver must reproduce.
struct PresetRow {
    int k;
    double gamma_in;
    double beta;
    std::vector<double> alphas;
};
const std::vector<PresetRow>& table1_rows();  // k = 1..6, all at gamma_in = 3
const std::vector<PresetRow>& table2_rows();  // 10 composition steps, k = 6

// Closed forms of the single-split analysis: the balanced fraction with no
// precomputed base layer, (log2 3 - 1)/(2 log2 3 - 1), and its exponent base.
double closed_form_alpha_no_preprocess();
double closed_form_base_no_preprocess();

}  // namespace obdd
