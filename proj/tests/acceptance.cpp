// Acceptance suite: each criterion runs standalone (argv[1] = 1..12) and
// prints a single PASS/FAIL line with the measured quantities.
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "x2y2/clr.hpp"
#include "x2y2/eigensolve.hpp"
#include "x2y2/experiments.hpp"
#include "x2y2/fiber.hpp"
#include "x2y2/geometry.hpp"
#include "x2y2/operators.hpp"
#include "x2y2/quadrature.hpp"
#include "x2y2/weyl.hpp"

using namespace x2y2;

namespace {

int report(int criterion, bool pass, const std::string& detail) {
    std::printf("acceptance %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    return pass ? 0 : 1;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

// ---- criterion 1: quadratic-form identity under refinement --------------

double bump(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s * s));
}

// five fixed smooth compactly supported spinor fields inside |x|,|y| < 5
using SpinorField = std::function<std::pair<double, double>(double, double)>;

std::vector<SpinorField> test_spinors() {
    auto b = [](double x, double y) { return bump(x / 5.0) * bump(y / 5.0); };
    return {
        [b](double x, double y) { return std::make_pair(b(x, y), 0.0); },
        [b](double x, double y) { return std::make_pair(0.0, b(x, y)); },
        [b](double x, double y) {
            return std::make_pair(b(x, y) * std::sin(x), b(x, y) * std::cos(y));
        },
        [b](double x, double y) {
            return std::make_pair(b(x, y) * x * y, b(x, y) * (x - y));
        },
        [b](double x, double y) {
            return std::make_pair(b(x, y) * std::sin(2.0 * x) * std::cos(y),
                                  b(x, y) * x);
        },
    };
}

double form_identity_error(const SpinorField& field, double h) {
    Box2D box = Box2D::with_spacing(6.0, h);
    auto H = assemble_hamiltonian(box, true);
    auto Q = assemble_supercharge(box);
    long nodes = box.n_interior();
    ComplexVector psi(2 * nodes);
    for (int i = 0; i < box.interior_x(); ++i)
        for (int j = 0; j < box.interior_y(); ++j) {
            auto [up, down] = field(box.x_at(i), box.y_at(j));
            long node = static_cast<long>(i) * box.interior_y() + j;
            psi[2 * node] = up;
            psi[2 * node + 1] = down;
        }
    double cell = box.h_x() * box.h_y();
    double form = psi.dot(H.mat * psi).real() * cell;
    double qnorm = (Q.mat * psi).squaredNorm() * cell;
    return std::abs(form - qnorm);
}

int criterion_1() {
    const std::vector<double> hs{0.2, 0.1, 0.05};
    double worst_order = 1e9;
    int idx = 0;
    for (const auto& field : test_spinors()) {
        ++idx;
        std::vector<double> errs;
        for (double h : hs) errs.push_back(form_identity_error(field, h));
        for (size_t k = 0; k + 1 < errs.size(); ++k) {
            double order = std::log2(errs[k] / errs[k + 1]);
            worst_order = std::min(worst_order, order);
        }
    }
    bool pass = worst_order >= 1.0;
    return report(1, pass,
                  fmt("form identity |<Psi,H Psi> - |Q Psi|^2| refines with order >= 1 "
                      "(worst observed order %.2f over 5 spinors, h = 0.2/0.1/0.05)",
                      worst_order));
}

// ---- criterion 2: energy decay of the trial states ----------------------

int criterion_2() {
    std::vector<double> ts{4, 8, 16, 32, 64}, qs;
    for (double t : ts) qs.push_back(quadratic_form(weyl_state(t)));
    double slope = loglog_slope(ts, qs);
    bool pass = std::abs(slope + 2.0) <= 0.15;
    return report(2, pass, fmt("trial-state energy exponent %.4f (target -2.0 +- 0.15)",
                               slope));
}

// ---- criterion 3: weighted-quotient dichotomy ---------------------------

int criterion_3() {
    std::vector<double> ts{4, 8, 16, 32};
    bool pass = true;
    std::string detail = "quotient exponents:";
    for (double alpha : {0.0, 1.0, 1.5}) {
        std::vector<double> qs;
        for (double t : ts) qs.push_back(weighted_quotient(weyl_state(t), WeightSpec(alpha)));
        double slope = loglog_slope(ts, qs);
        pass = pass && std::abs(slope - (alpha - 2.0)) <= 0.2;
        detail += fmt(" alpha=%.1f: %.3f (target %.1f +- 0.2)", alpha, slope, alpha - 2.0);
    }
    std::vector<double> qs;
    for (double t : ts) qs.push_back(weighted_quotient(weyl_state(t), WeightSpec(3.0)));
    double slope3 = loglog_slope(ts, qs);
    pass = pass && slope3 >= -0.2;
    detail += fmt(" alpha=3.0: %.3f (target >= -0.2)", slope3);
    return report(3, pass, detail);
}

// ---- criterion 4: fiber ground-state lower bound and slope ---------------

int criterion_4() {
    bool pass = true;
    double worst_margin = 1e9;
    for (int k = 7; k >= 0; --k) {
        double eps = std::pow(2.0, -k);
        GroundResult g = ground_energy_checked(assemble_fiber(eps));
        double margin = g.value - (-eps / 4.0 - g.tol_disc);
        worst_margin = std::min(worst_margin, margin);
        pass = pass && margin >= 0.0;
    }
    // first-order slope of the ground-state expectation at small epsilon
    FiberGrid grid = FiberGrid::for_epsilon(0.0);
    GroundProjector phi = GroundProjector::on_grid(grid);
    auto expectation = [&](double eps) {
        double e = 0.0;
        for (int i = 0; i < grid.n_interior; ++i)
            e += phi.h * phi.phi0[i] * phi.phi0[i] * fiber_potential(eps, grid.t_at(i));
        return e;
    };
    double delta = 0.005;
    double slope = (expectation(delta) - expectation(0.0)) / delta;
    pass = pass && std::abs(slope + 0.25) <= 0.05 * 0.25;
    return report(4, pass,
                  fmt("ground >= -eps/4 - tol_disc over eps in {2^-7..1} (worst margin "
                      "%.2e); perturbative slope %.5f (target -0.25 +- 5%%)",
                      worst_margin, slope));
}

// ---- criterion 5: excitation gap sqrt(2) --------------------------------

int criterion_5() {
    double gap = excitation_gap(assemble_fiber(0.0));
    double gap_fine = excitation_gap(assemble_fiber(0.0, FiberGrid::for_epsilon(0.0).refined()));
    bool converged = std::abs(gap - gap_fine) < 1e-4;
    bool pass = converged && std::abs(gap_fine - std::sqrt(2.0)) <= 1e-3;
    return report(5, pass,
                  fmt("gap %.6f (target 1.41421 +- 1e-3, refinement shift %.1e)",
                      gap_fine, std::abs(gap - gap_fine)));
}

// ---- criterion 6: projector decomposition --------------------------------

int criterion_6() {
    bool pass = true;
    double worst = 1e9;
    for (int k = 4; k >= 0; --k) {
        double eps = 0.1 * std::pow(2.0, -k);
        FiberProblem p = assemble_fiber(eps, FiberGrid::for_epsilon(eps, 0.05));
        GroundResult g = ground_energy_checked(p);
        double a = -eps / 4.0 - 0.05 * eps;
        double min_eig = 0.0;
        bool ok = projector_bound_check(p, a, 0.5, g.tol_disc, &min_eig);
        worst = std::min(worst, min_eig + g.tol_disc);
        pass = pass && ok;
    }
    return report(6, pass,
                  fmt("H(eps) >= a P0 + 0.5 P0_perp for eps <= 0.1, a = -eps/4 - 0.05 eps "
                      "(worst min-eig margin %.2e)",
                      worst));
}

// ---- criterion 7: inertia counting against the dense oracle --------------

int criterion_7() {
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> dim(100, 900);
    std::uniform_real_distribution<double> val(-4.0, 4.0);
    int mismatches = 0, trials = 0;
    for (int rep = 0; rep < 50; ++rep) {
        int n = dim(gen);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<Eigen::Triplet<Complex>> t;
        for (int i = 0; i < n; ++i) t.emplace_back(i, i, val(gen));
        for (int k = 0; k < 4 * n; ++k) {
            int i = pick(gen), j = pick(gen);
            if (i == j) continue;
            double v = val(gen);
            t.emplace_back(i, j, v);
            t.emplace_back(j, i, v);
        }
        SparseHermitianOperator op;
        op.mat.resize(n, n);
        op.mat.setFromTriplets(t.begin(), t.end());
        double shift = val(gen);
        ++trials;
        if (count_negative(op, shift).n_negative !=
            count_negative_dense(op, shift).n_negative)
            ++mismatches;
    }
    // weighted-shift instances on a 30x30 interior grid
    Box2D box(6.0, 6.0, 32, 32);
    for (double lambda : {1.0, 5.0, 20.0}) {
        auto op = assemble_shifted(box, WeightSpec(3.0, lambda));
        ++trials;
        if (count_negative(op).n_negative != count_negative_dense(op).n_negative)
            ++mismatches;
    }
    bool pass = mismatches == 0;
    return report(7, pass,
                  fmt("inertia count == dense count on %d/%d instances "
                      "(50 randomized + 3 weighted-shift grids)",
                      trials - mismatches, trials));
}

// ---- criterion 8: discreteness transition across alpha = 2 ---------------

int criterion_8() {
    // The second-order stencil gives the transverse oscillator at |x| a spurious
    // ground-state error of about -(xh)^2/16, so at h = 0.1 the unshifted operator
    // (whose true count is exactly 0) acquires negative modes once L exceeds ~13
    // (measured: N = 2 at L = 14, N = 24 at L = 40).  Boxes are therefore kept
    // inside the artifact-free window, certified by checking the unshifted count
    // vanishes on every box used.
    const double h = 0.1;
    std::vector<double> boxes{4.0, 8.0, 12.0};
    std::vector<long> base;
    for (double L : boxes) {
        auto H = assemble_hamiltonian(Box2D::with_spacing(L, h), true);
        base.push_back(count_negative(H).n_negative);
    }
    bool clean = base[0] == 0 && base[1] == 0 && base[2] == 0;

    auto rows = transition_experiment({3.0, 1.0}, 1.0, boxes, h);
    const TransitionRow& r3 = rows[0];
    const TransitionRow& r1 = rows[1];
    bool ok3 = r3.error.empty() && r3.saturating;
    bool ok1 = r1.error.empty() && r1.counts[0] < r1.counts[1] &&
               r1.counts[1] < r1.counts[2];
    bool pass = clean && ok3 && ok1;
    return report(8, pass,
                  fmt("lambda = 1, L in {4,8,12}, h = 0.1: unshifted counts "
                      "{%ld,%ld,%ld} all zero (artifact-free grid): %s; alpha=3 counts "
                      "{%ld,%ld,%ld} saturate (delta <= 1): %s; alpha=1 counts "
                      "{%ld,%ld,%ld} strictly increase: %s",
                      base[0], base[1], base[2], clean ? "yes" : "no", r3.counts[0],
                      r3.counts[1], r3.counts[2], ok3 ? "yes" : "no", r1.counts[0],
                      r1.counts[1], r1.counts[2], ok1 ? "yes" : "no"));
}

// ---- criterion 9: growth exponent ----------------------------------------

int criterion_9() {
    GrowthResult g = growth_experiment(3.0, {2, 4, 8, 16, 32, 64}, 14.0, 0.1);
    bool pass = g.fit.exponent <= 1.55 && g.fit.exponent > 0.0;
    std::string counts;
    for (auto& [l, n] : g.counts) counts += fmt(" N(%g)=%ld", l, n);
    return report(9, pass,
                  fmt("alpha=3, L=14: growth exponent %.3f (target <= 1.55, r^2 %.4f, "
                      "underpowered: %s);%s",
                      g.fit.exponent, g.fit.r_squared, g.underpowered ? "yes" : "no",
                      counts.c_str()));
}

// ---- criterion 10: bosonic counting asymptotics ---------------------------

int criterion_10() {
    std::vector<double> lambdas;
    for (int k = 0; k <= 5; ++k) lambdas.push_back(5.0 * std::pow(12.0, k / 5.0));
    BosonicResult b = bosonic_experiment(lambdas, 14.0, 0.1);
    double p = b.power_fit.exponent;
    bool pass = p >= 1.35 && p <= 1.7;
    std::string counts;
    for (auto& [l, n] : b.counts) counts += fmt(" N(%.1f)=%ld", l, n);
    return report(10, pass,
                  fmt("bosonic exponent %.3f (target [1.35, 1.7], power-log exponent "
                      "%.3f, window shrunk: %s);%s",
                      p, b.power_log_fit.exponent, b.window_shrunk ? "yes" : "no",
                      counts.c_str()));
}

// ---- criterion 11: CLR dimensional reductions -----------------------------

int criterion_11() {
    std::mt19937 gen(31);
    std::uniform_real_distribution<double> amp(0.5, 8.0), width(0.5, 3.0),
        center(1.0, 8.0);
    int bad = 0;
    for (int rep = 0; rep < 20; ++rep) {
        double a1 = amp(gen), w1 = width(gen), c1 = center(gen);
        double a2 = amp(gen), w2 = width(gen), c2 = center(gen);
        auto V = [=](double r) {
            return -a1 * std::exp(-(r - c1) * (r - c1) / w1) -
                   a2 * std::exp(-(r - c2) * (r - c2) / w2);
        };
        auto radial = radial_lift_check(V, 25.0, 2500);
        if (std::abs(radial.first - radial.second) > 1) ++bad;
        auto logsub = log_substitution_check(
            [=](double x) { return V(x) - a1 * std::pow(x, -2.5); }, 50.0, 3000);
        if (std::abs(logsub.first - logsub.second) > 1) ++bad;
    }
    bool pass = bad == 0;
    return report(11, pass,
                  fmt("radial-lift and log-substitution counts agree within +-1 on "
                      "%d/40 randomized potentials",
                      40 - bad));
}

// ---- criterion 12: closed-form quadrature family ---------------------------

int criterion_12() {
    bool pass = true;
    std::string detail = "int_1^inf x^(-1-a) (ln x)^2 dx vs 2/a^3:";
    for (double a : {1.0, 2.0, 3.0}) {
        auto r = quad::integrate_to_infinity(
            [a](double x) {
                double lx = std::log(x);
                return std::pow(x, -1.0 - a) * lx * lx;
            },
            1.0, 1e-12, 1e-10);
        double expected = 2.0 / (a * a * a);
        double rel = std::abs(r.value - expected) / expected;
        pass = pass && !r.divergent && rel <= 1e-8;
        detail += fmt(" a=%g: rel err %.2e", a, rel);
    }
    return report(12, pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <criterion 1..12>\n", argv[0]);
        return 2;
    }
    int c = std::atoi(argv[1]);
    switch (c) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
        case 8: return criterion_8();
        case 9: return criterion_9();
        case 10: return criterion_10();
        case 11: return criterion_11();
        case 12: return criterion_12();
        default:
            std::fprintf(stderr, "unknown criterion %d\n", c);
            return 2;
    }
}
