#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x2y2/eigensolve.hpp"
#include "x2y2/types.hpp"

namespace x2y2 {

struct FitResult {
    std::string model;  // "power" | "power_log"
    double exponent = 0.0;
    double log_power = 0.0;  // 1 for the power*log model, 0 otherwise
    double r_squared = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
};

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Least squares in log space. "power": N = c x^p. "power_log": N = c x^p ln x.
FitResult fit_growth(const std::vector<std::pair<double, double>>& points,
                     const std::string& model);

struct TransitionRow {
    double alpha;
    std::vector<double> box_half_widths;
    std::vector<long> counts;        // N_L per box
    bool saturating;                 // last two boxes agree within 1
    std::string error;               // nonempty if a cell failed
};

// For each alpha: N(H_lambda) across increasing Dirichlet boxes.
std::vector<TransitionRow> transition_experiment(const std::vector<double>& alphas,
                                                 double lambda_fixed,
                                                 const std::vector<double>& boxes,
                                                 double h = 0.1);

struct GrowthResult {
    std::vector<std::pair<double, long>> counts;  // (lambda, N)
    FitResult fit;
    bool underpowered = false;  // max N < 30
};

// Fitted growth exponent of N(H_lambda) over a geometric lambda grid.
GrowthResult growth_experiment(double alpha, const std::vector<double>& lambdas,
                               double box_half_width, double h = 0.1);

struct BosonicResult {
    std::vector<std::pair<double, long>> counts;  // (lambda, N(H_B - lambda))
    FitResult power_fit;
    FitResult power_log_fit;
    bool window_shrunk = false;  // saturation diagnostic dropped top lambdas
};

BosonicResult bosonic_experiment(const std::vector<double>& lambdas,
                                 double box_half_width, double h = 0.1);

struct SweepPlan {
    std::string kind;  // transition | growth | bosonic | weyl | fiber | clr
    std::vector<double> alphas;
    std::vector<double> lambdas;
    std::vector<double> boxes;
    std::vector<double> ts;
    std::vector<double> epsilons;
    double h = 0.1;
    std::string output_path;
};

struct RunSummary {
    int executed = 0;
    int skipped = 0;
    int failed = 0;
};

// Executes the plan cells, appending one JSON line per cell to the output
// file. Cells already present (matched by content hash) are skipped, so
// re-runs are idempotent.
RunSummary run_plan(const SweepPlan& plan);

}  // namespace x2y2
