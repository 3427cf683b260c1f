#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "x2y2/clr.hpp"
#include "x2y2/experiments.hpp"
#include "x2y2/fiber.hpp"
#include "x2y2/io.hpp"
#include "x2y2/operators.hpp"
#include "x2y2/weyl.hpp"

using namespace x2y2;
using nlohmann::json;

namespace {

struct Config {
    double C3 = 0.1156;
    double C_q = 1.0;
    double kappa = std::sqrt(2.0);
    double delta = 0.8;
    double c2 = 25.0;  // >= (1-delta)^-2 = 25 at delta = 0.8
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config " + path);
    json j = json::parse(f);
    if (j.contains("C3")) cfg.C3 = j["C3"].get<double>();
    if (j.contains("C_q")) cfg.C_q = j["C_q"].get<double>();
    if (j.contains("kappa")) cfg.kappa = j["kappa"].get<double>();
    if (j.contains("delta")) cfg.delta = j["delta"].get<double>();
    if (j.contains("c2")) cfg.c2 = j["c2"].get<double>();
    return cfg;
}

SparseHermitianOperator build_operator(const std::string& kind, double L, double h,
                                       double alpha, double lambda) {
    Box2D box = Box2D::with_spacing(L, h);
    if (kind == "laplacian") return assemble_laplacian(box);
    if (kind == "hamiltonian") return assemble_hamiltonian(box, true);
    if (kind == "bosonic") return assemble_hamiltonian(box, false);
    if (kind == "supercharge") return assemble_supercharge(box);
    if (kind == "weight") return assemble_weight(box, WeightSpec(alpha, lambda));
    if (kind == "shifted") return assemble_shifted(box, WeightSpec(alpha, lambda));
    throw std::invalid_argument("unknown operator kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for the weighted supersymmetric x^2y^2 model"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (constants, defaults)");

    // assemble
    auto* cmd_assemble = app.add_subcommand("assemble", "assemble an operator and export it");
    std::string as_kind = "hamiltonian", as_out = "operator.txt";
    double as_L = 6.0, as_h = 0.1, as_alpha = 3.0, as_lambda = 1.0;
    cmd_assemble->add_option("--kind", as_kind, "laplacian|hamiltonian|bosonic|supercharge|weight|shifted");
    cmd_assemble->add_option("--L", as_L, "box half width");
    cmd_assemble->add_option("--spacing", as_h, "grid spacing h");
    cmd_assemble->add_option("--alpha", as_alpha);
    cmd_assemble->add_option("--lambda", as_lambda);
    cmd_assemble->add_option("--out", as_out, "output path (sidecar at <out>.json)");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "low-lying spectrum of an exported operator");
    std::string sp_in;
    int sp_k = 4;
    double sp_tol = 1e-8;
    bool sp_dense = false;
    cmd_spectrum->add_option("--in", sp_in)->required();
    cmd_spectrum->add_option("--k", sp_k);
    cmd_spectrum->add_option("--tol", sp_tol);
    cmd_spectrum->add_flag("--dense", sp_dense);

    // count
    auto* cmd_count = app.add_subcommand("count", "negative-eigenvalue count via inertia");
    std::string ct_in;
    double ct_shift = 0.0;
    bool ct_dense = false;
    cmd_count->add_option("--in", ct_in)->required();
    cmd_count->add_option("--shift", ct_shift);
    cmd_count->add_flag("--dense", ct_dense);

    // weyl
    auto* cmd_weyl = app.add_subcommand("weyl", "Weyl-sequence sweep, CSV output");
    std::vector<double> wy_ts{4, 8, 16, 32, 64}, wy_alphas{0, 1, 1.5, 3};
    std::string wy_csv = "weyl.csv";
    cmd_weyl->add_option("--t", wy_ts);
    cmd_weyl->add_option("--alpha", wy_alphas);
    cmd_weyl->add_option("--csv", wy_csv);

    // fiber
    auto* cmd_fiber = app.add_subcommand("fiber", "fiber-operator sweep, CSV output");
    std::vector<double> fb_eps{1.0 / 128, 1.0 / 64, 1.0 / 32, 1.0 / 16, 1.0 / 8, 0.25, 0.5, 1.0};
    std::string fb_csv = "fiber.csv";
    cmd_fiber->add_option("--eps", fb_eps);
    cmd_fiber->add_option("--csv", fb_csv);

    // clr
    auto* cmd_clr = app.add_subcommand("clr", "CLR bound table, CSV output");
    std::vector<double> cl_lambdas{1, 2, 4, 8};
    double cl_alpha = 3.0, cl_q = 1.2;
    std::string cl_csv = "clr.csv";
    cmd_clr->add_option("--lambda", cl_lambdas);
    cmd_clr->add_option("--alpha", cl_alpha);
    cmd_clr->add_option("--q", cl_q);
    cmd_clr->add_option("--csv", cl_csv);

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "run a sweep plan (JSON), append JSON-lines");
    std::string sw_plan;
    cmd_sweep->add_option("--plan", sw_plan, "plan JSON file")->required();

    // fit
    auto* cmd_fit = app.add_subcommand("fit", "fit growth exponent from a results file");
    std::string ft_in, ft_model = "power";
    cmd_fit->add_option("--in", ft_in, "JSON-lines results file")->required();
    cmd_fit->add_option("--model", ft_model, "power|power_log");

    // report
    auto* cmd_report = app.add_subcommand("report", "markdown summary: measured N vs bound shape");
    std::string rp_in;
    double rp_alpha = 3.0, rp_C_alpha = 0.0, rp_eps_alpha = 0.25;
    cmd_report->add_option("--in", rp_in, "JSON-lines growth results")->required();
    cmd_report->add_option("--alpha", rp_alpha);
    cmd_report->add_option("--C-alpha", rp_C_alpha);
    cmd_report->add_option("--eps-alpha", rp_eps_alpha);

    CLI11_PARSE(app, argc, argv);
    Config cfg = load_config(config_path);

    try {
        if (*cmd_assemble) {
            auto op = build_operator(as_kind, as_L, as_h, as_alpha, as_lambda);
            export_operator(op, as_out);
            std::cout << "wrote " << as_out << " (dim " << op.dimension() << ")\n";
        } else if (*cmd_spectrum) {
            auto op = import_operator(sp_in);
            SpectralResult r = sp_dense ? dense_spectrum(op)
                                        : lowest_eigenpairs(op, sp_k, sp_tol);
            std::cout << to_json_line(r) << "\n";
        } else if (*cmd_count) {
            auto op = import_operator(ct_in);
            CountResult r = ct_dense ? count_negative_dense(op, ct_shift)
                                     : count_negative(op, ct_shift);
            std::cout << to_json_line(r) << "\n";
        } else if (*cmd_weyl) {
            std::ofstream csv(wy_csv);
            csv << "t,alpha,form,weighted_norm,quotient,quadrature_error\n";
            for (double t : wy_ts) {
                WeylState state = weyl_state(t);
                double qe = 0;
                double form = quadratic_form(state, &qe);
                for (double alpha : wy_alphas) {
                    double we = 0;
                    double wn = weighted_norm(state, WeightSpec(alpha, 1.0), &we);
                    csv << t << "," << alpha << "," << form << "," << wn << ","
                        << form / wn << "," << std::max(qe, we) << "\n";
                }
            }
            std::cout << "wrote " << wy_csv << "\n";
        } else if (*cmd_fiber) {
            std::ofstream csv(fb_csv);
            csv << "epsilon,ground,gap,bound_ok\n";
            for (double eps : fb_eps) {
                FiberProblem p = assemble_fiber(eps);
                GroundResult g = ground_energy_checked(p);
                double gap = excitation_gap(p);
                bool ok = g.value >= -eps / 4.0 - g.tol_disc;
                csv << eps << "," << g.value << "," << gap << "," << (ok ? 1 : 0) << "\n";
            }
            std::cout << "wrote " << fb_csv << "\n";
        } else if (*cmd_clr) {
            std::ofstream csv(cl_csv);
            csv << "lambda,alpha,q,bound_value,cartesian_component,region_A_component\n";
            BoundConstants consts(cfg.C3, cfg.C_q, cl_q);
            for (double lambda : cl_lambdas) {
                double cart = cartesian_region_bound(lambda, cl_alpha, consts);
                RegionSpec spec(std::pow(partition(RegionSpec()).c1() + cfg.c2 + lambda, 2.0 / 3.0),
                                cfg.kappa, cfg.delta);
                double regA = region_A_bound(lambda, cl_alpha, cl_q, spec, cfg.C_q);
                csv << lambda << "," << cl_alpha << "," << cl_q << "," << cart + regA
                    << "," << cart << "," << regA << "\n";
            }
            std::cout << "wrote " << cl_csv << "\n";
        } else if (*cmd_sweep) {
            std::ifstream f(sw_plan);
            if (!f) throw std::runtime_error("cannot open plan " + sw_plan);
            json j = json::parse(f);
            SweepPlan plan;
            plan.kind = j.at("kind").get<std::string>();
            if (j.contains("alphas")) plan.alphas = j["alphas"].get<std::vector<double>>();
            if (j.contains("lambdas")) plan.lambdas = j["lambdas"].get<std::vector<double>>();
            if (j.contains("boxes")) plan.boxes = j["boxes"].get<std::vector<double>>();
            if (j.contains("ts")) plan.ts = j["ts"].get<std::vector<double>>();
            if (j.contains("epsilons")) plan.epsilons = j["epsilons"].get<std::vector<double>>();
            if (j.contains("h")) plan.h = j["h"].get<double>();
            plan.output_path = j.at("output").get<std::string>();
            RunSummary s = run_plan(plan);
            std::cout << "executed " << s.executed << ", skipped " << s.skipped
                      << ", failed " << s.failed << "\n";
        } else if (*cmd_fit) {
            std::ifstream f(ft_in);
            if (!f) throw std::runtime_error("cannot open " + ft_in);
            std::vector<std::pair<double, double>> pts;
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty()) continue;
                json j = json::parse(line);
                if (j.value("status", "") != "ok") continue;
                double lambda = j.value("lambda", 0.0);
                double n = j["result"].value("n_negative", 0L);
                if (lambda > 0 && n > 0) pts.emplace_back(lambda, n);
            }
            std::sort(pts.begin(), pts.end());
            FitResult fit = fit_growth(pts, ft_model);
            json out = {{"model", fit.model}, {"exponent", fit.exponent},
                        {"r_squared", fit.r_squared},
                        {"window", {fit.window_lo, fit.window_hi}}};
            std::cout << out.dump() << "\n";
        } else if (*cmd_report) {
            std::ifstream f(rp_in);
            if (!f) throw std::runtime_error("cannot open " + rp_in);
            std::vector<std::pair<double, double>> pts;
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty()) continue;
                json j = json::parse(line);
                if (j.value("status", "") != "ok") continue;
                double lambda = j.value("lambda", 0.0);
                double n = j["result"].value("n_negative", 0L);
                if (lambda > 0) pts.emplace_back(lambda, n);
            }
            std::sort(pts.begin(), pts.end());
            BoundConstants consts(cfg.C3, cfg.C_q, 1.2);
            std::cout << "| lambda | measured N | bound value |\n";
            std::cout << "|-------:|-----------:|------------:|\n";
            for (auto& [lambda, n] : pts) {
                double bound = theorem1_bound(lambda, rp_alpha, consts, rp_C_alpha,
                                              rp_eps_alpha);
                std::cout << "| " << lambda << " | " << n << " | " << bound << " |\n";
            }
            std::vector<std::pair<double, double>> positive;
            for (auto& p : pts)
                if (p.second > 0) positive.push_back(p);
            if (positive.size() >= 5) {
                FitResult fit = fit_growth(positive, "power");
                std::cout << "\nfitted exponent: " << fit.exponent
                          << " (bound shape exponent " << 1.5 - rp_eps_alpha << ")\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
