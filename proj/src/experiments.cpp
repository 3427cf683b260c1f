#include "x2y2/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "x2y2/clr.hpp"
#include "x2y2/fiber.hpp"
#include "x2y2/io.hpp"
#include "x2y2/operators.hpp"
#include "x2y2/weyl.hpp"

namespace x2y2 {

using nlohmann::json;

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need >= 2 matched points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) continue;
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    double denom = n * sxx - sx * sx;
    if (n < 2 || std::abs(denom) < 1e-14)
        throw std::invalid_argument("loglog_slope: degenerate design");
    return (n * sxy - sx * sy) / denom;
}

FitResult fit_growth(const std::vector<std::pair<double, double>>& points,
                     const std::string& model) {
    if (model != "power" && model != "power_log")
        throw std::invalid_argument("fit_growth: unknown model " + model);
    if (points.size() < 5)
        throw std::invalid_argument("fit_growth: need at least 5 points");
    if (points.back().second < points.front().second)
        throw std::invalid_argument("fit_growth: data not increasing overall");

    std::vector<double> lx, ly;
    for (const auto& [x, n] : points) {
        if (x <= 0 || n <= 0) continue;
        if (model == "power_log" && std::log(x) <= 0) continue;
        double target = std::log(n);
        if (model == "power_log") target -= std::log(std::log(x));
        lx.push_back(std::log(x));
        ly.push_back(target);
    }
    if (lx.size() < 3) throw std::invalid_argument("fit_growth: too few usable points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(lx.size());
    for (int i = 0; i < n; ++i) {
        sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-14)
        throw std::invalid_argument("fit_growth: degenerate design matrix");
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;

    double ss_res = 0, ss_tot = 0, mean = sy / n;
    for (int i = 0; i < n; ++i) {
        double pred = intercept + slope * lx[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - mean) * (ly[i] - mean);
    }
    FitResult fit;
    fit.model = model;
    fit.exponent = slope;
    fit.log_power = model == "power_log" ? 1.0 : 0.0;
    fit.r_squared = ss_tot > 0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    fit.window_lo = points.front().first;
    fit.window_hi = points.back().first;
    return fit;
}

std::vector<TransitionRow> transition_experiment(const std::vector<double>& alphas,
                                                 double lambda_fixed,
                                                 const std::vector<double>& boxes,
                                                 double h) {
    if (!std::is_sorted(boxes.begin(), boxes.end()))
        throw std::invalid_argument("transition_experiment: boxes must be increasing");
    std::vector<TransitionRow> rows;
    for (double alpha : alphas) {
        TransitionRow row;
        row.alpha = alpha;
        row.box_half_widths = boxes;
        row.saturating = false;
        for (double L : boxes) {
            try {
                Box2D box = Box2D::with_spacing(L, h);
                auto op = assemble_shifted(box, WeightSpec(alpha, lambda_fixed));
                row.counts.push_back(count_negative(op).n_negative);
            } catch (const std::exception& e) {
                row.error = e.what();
                row.counts.push_back(-1);
            }
        }
        size_t m = row.counts.size();
        if (m >= 2 && row.counts[m - 1] >= 0 && row.counts[m - 2] >= 0)
            row.saturating = std::abs(row.counts[m - 1] - row.counts[m - 2]) <= 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

GrowthResult growth_experiment(double alpha, const std::vector<double>& lambdas,
                               double box_half_width, double h) {
    if (alpha <= 2)
        throw std::invalid_argument("growth_experiment: requires alpha > 2");
    GrowthResult res;
    Box2D box = Box2D::with_spacing(box_half_width, h);
    for (double lambda : lambdas) {
        auto op = assemble_shifted(box, WeightSpec(alpha, lambda));
        res.counts.emplace_back(lambda, count_negative(op).n_negative);
    }
    long max_n = 0;
    std::vector<std::pair<double, double>> pts;
    for (auto& [l, n] : res.counts) {
        max_n = std::max(max_n, n);
        if (n > 0) pts.emplace_back(l, static_cast<double>(n));
    }
    res.underpowered = max_n < 30;
    res.fit = fit_growth(pts, "power");
    return res;
}

BosonicResult bosonic_experiment(const std::vector<double>& lambdas,
                                 double box_half_width, double h) {
    BosonicResult res;
    Box2D box = Box2D::with_spacing(box_half_width, h);
    auto hb = assemble_hamiltonian(box, false);
    for (double lambda : lambdas)
        res.counts.emplace_back(lambda, count_negative(hb, lambda).n_negative);

    // Dirichlet-saturation diagnostic: the top lambda must give the same count
    // on a 25% smaller box, otherwise the window is shrunk.
    Box2D smaller = Box2D::with_spacing(0.75 * box_half_width, h);
    auto hb_small = assemble_hamiltonian(smaller, false);
    while (res.counts.size() > 5) {
        double top = res.counts.back().first;
        long n_small = count_negative(hb_small, top).n_negative;
        if (n_small == res.counts.back().second) break;
        res.counts.pop_back();
        res.window_shrunk = true;
    }

    std::vector<std::pair<double, double>> pts;
    for (auto& [l, n] : res.counts)
        if (n > 0) pts.emplace_back(l, static_cast<double>(n));
    res.power_fit = fit_growth(pts, "power");
    res.power_log_fit = fit_growth(pts, "power_log");
    return res;
}

namespace {

std::string cell_hash(const json& cell) {
    return std::to_string(std::hash<std::string>{}(cell.dump()));
}

std::set<std::string> completed_cells(const std::string& path) {
    std::set<std::string> done;
    std::ifstream f(path);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (j.contains("cell_hash")) done.insert(j["cell_hash"].get<std::string>());
        } catch (...) {
        }
    }
    return done;
}

}  // namespace

RunSummary run_plan(const SweepPlan& plan) {
    RunSummary summary;
    std::set<std::string> done = completed_cells(plan.output_path);

    // one cell = one parameter tuple; the hash covers everything that affects
    // the numbers (timing fields are never hashed)
    auto run_cell = [&](const json& cell, const std::function<json()>& work) {
        std::string hash = cell_hash(cell);
        if (done.count(hash)) {
            ++summary.skipped;
            return;
        }
        json record = cell;
        record["cell_hash"] = hash;
        try {
            record["result"] = work();
            record["status"] = "ok";
            ++summary.executed;
        } catch (const std::exception& e) {
            record["status"] = "failed";
            record["error"] = e.what();
            ++summary.failed;
        }
        append_json_line(plan.output_path, record.dump());
    };

    if (plan.kind == "transition") {
        for (double alpha : plan.alphas)
            for (double L : plan.boxes)
                for (double lambda : plan.lambdas) {
                    json cell = {{"kind", "transition"}, {"alpha", alpha},
                                 {"lambda", lambda}, {"L", L}, {"h", plan.h}};
                    run_cell(cell, [&]() -> json {
                        Box2D box = Box2D::with_spacing(L, plan.h);
                        auto op = assemble_shifted(box, WeightSpec(alpha, lambda));
                        auto c = count_negative(op);
                        return {{"n_negative", c.n_negative}, {"method", c.method},
                                {"perturbation", c.perturbation}};
                    });
                }
    } else if (plan.kind == "growth") {
        for (double alpha : plan.alphas)
            for (double lambda : plan.lambdas)
                for (double L : plan.boxes) {
                    json cell = {{"kind", "growth"}, {"alpha", alpha},
                                 {"lambda", lambda}, {"L", L}, {"h", plan.h}};
                    run_cell(cell, [&]() -> json {
                        Box2D box = Box2D::with_spacing(L, plan.h);
                        auto op = assemble_shifted(box, WeightSpec(alpha, lambda));
                        return {{"n_negative", count_negative(op).n_negative}};
                    });
                }
    } else if (plan.kind == "bosonic") {
        for (double lambda : plan.lambdas)
            for (double L : plan.boxes) {
                json cell = {{"kind", "bosonic"}, {"lambda", lambda}, {"L", L},
                             {"h", plan.h}};
                run_cell(cell, [&]() -> json {
                    Box2D box = Box2D::with_spacing(L, plan.h);
                    auto hb = assemble_hamiltonian(box, false);
                    return {{"n_negative", count_negative(hb, lambda).n_negative}};
                });
            }
    } else if (plan.kind == "weyl") {
        for (double alpha : plan.alphas)
            for (double t : plan.ts) {
                json cell = {{"kind", "weyl"}, {"alpha", alpha}, {"t", t}};
                run_cell(cell, [&]() -> json {
                    WeylState state = weyl_state(t);
                    double qe = 0, we = 0;
                    double form = quadratic_form(state, &qe);
                    double wnorm = weighted_norm(state, WeightSpec(alpha, 1.0), &we);
                    return {{"form", form}, {"weighted_norm", wnorm},
                            {"quotient", form / wnorm},
                            {"quadrature_error", std::max(qe, we)}};
                });
            }
    } else if (plan.kind == "fiber") {
        for (double eps : plan.epsilons) {
            json cell = {{"kind", "fiber"}, {"epsilon", eps}};
            run_cell(cell, [&]() -> json {
                FiberProblem p = assemble_fiber(eps);
                GroundResult g = ground_energy_checked(p);
                double gap = excitation_gap(p);
                bool ok = g.value >= -eps / 4.0 - g.tol_disc;
                return {{"ground", g.value}, {"tol_disc", g.tol_disc},
                        {"gap", gap}, {"bound_ok", ok}};
            });
        }
    } else if (plan.kind == "clr") {
        for (double alpha : plan.alphas)
            for (double lambda : plan.lambdas) {
                json cell = {{"kind", "clr"}, {"alpha", alpha}, {"lambda", lambda}};
                run_cell(cell, [&]() -> json {
                    BoundConstants consts;
                    double bound = cartesian_region_bound(lambda, alpha, consts);
                    return {{"cartesian_bound", bound}, {"C3", consts.C3}};
                });
            }
    } else {
        throw std::invalid_argument("run_plan: unknown kind " + plan.kind);
    }
    return summary;
}

}  // namespace x2y2
