#include "x2y2/clr.hpp"

#include <Eigen/Eigenvalues>

#include "x2y2/fiber.hpp"
#include "x2y2/quadrature.hpp"

namespace x2y2 {

double negative_trace_power(const std::vector<double>& levels, double p) {
    if (p <= 0) throw std::invalid_argument("negative_trace_power: p must be positive");
    double sum = 0.0;
    for (double e : levels)
        if (e < 0) sum += std::pow(-e, p);
    return sum;
}

namespace {

double trace_integrand(const FiberedPotential& pot, double x) {
    return negative_trace_power(pot.levels(x), 1.5);
}

}  // namespace

double clr_halfline(const FiberedPotential& pot, double C3) {
    auto r = quad::integrate_to_infinity(
        [&](double x) { return trace_integrand(pot, x) * x * x; }, pot.domain_lo,
        1e-10, 1e-8);
    if (r.divergent) throw DivergentIntegral("clr_halfline: bound integral diverges");
    return 4.0 * M_PI * C3 * r.value;
}

double clr_log_weighted(const FiberedPotential& pot, double C3) {
    double lo = std::max(pot.domain_lo, 1.0);
    auto r = quad::integrate_to_infinity(
        [&](double x) {
            double lx = std::log(x);
            return trace_integrand(pot, x) * x * x * lx * lx;
        },
        lo, 1e-10, 1e-8);
    if (r.divergent) throw DivergentIntegral("clr_log_weighted: bound integral diverges");
    return 4.0 * M_PI * C3 * r.value;
}

double cartesian_region_bound(double lambda, double alpha, const BoundConstants& consts) {
    if (alpha <= 2)
        throw DivergentIntegral("cartesian_region_bound: finite only for alpha > 2");
    if (lambda == 0) return 0.0;
    const double a = 1.5 * alpha - 3.0;  // x^(-3 alpha/2) x^2 = x^(-1-a)
    const double prefactor = 8.0 * M_PI * consts.C3 * (1.0 + lambda / 2.0) *
                             std::pow(lambda, 1.5);
    const double closed = prefactor * 2.0 / (a * a * a);

    auto r = quad::integrate_to_infinity(
        [&](double x) {
            double lx = std::log(x);
            return std::pow(x, -1.0 - a) * lx * lx;
        },
        1.0, 1e-12, 1e-10);
    double by_quadrature = prefactor * r.value;
    if (std::abs(by_quadrature - closed) > 1e-8 * std::abs(closed))
        throw std::runtime_error("cartesian_region_bound: quadrature/closed-form mismatch");
    return closed;
}

double theorem1_bound(double lambda, double alpha, const BoundConstants& consts,
                      double C_alpha, double eps_alpha) {
    if (alpha <= 2) throw std::invalid_argument("theorem1_bound: requires alpha > 2");
    if (eps_alpha <= 0 || eps_alpha >= 0.5 * (alpha - 2.0))
        throw std::invalid_argument("theorem1_bound: eps_alpha out of (0, (alpha-2)/2)");
    double d = alpha - 2.0;
    return C_alpha + std::pow(2.0, 12) * M_PI * consts.C3 / (27.0 * d * d * d) *
                         std::pow(lambda, 1.5 - eps_alpha);
}

namespace {

long tridiag_negative_count(const Vector& diag, const Vector& sub) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    long c = 0;
    for (long i = 0; i < es.eigenvalues().size() && es.eigenvalues()[i] < 0; ++i) ++c;
    return c;
}

}  // namespace

std::pair<long, long> radial_lift_check(const std::function<double(double)>& V,
                                        double r_max, int n) {
    double h = r_max / (n + 1);

    // half-line finite differences on u(r), Dirichlet at 0 and r_max
    Vector d1(n), s1 = Vector::Constant(n - 1, -1.0 / (h * h));
    for (int i = 0; i < n; ++i) {
        double r = (i + 1) * h;
        d1[i] = 2.0 / (h * h) + V(r);
    }
    long count_1d = tridiag_negative_count(d1, s1);

    // radial 3-D quadratic form int (r^2 psi'^2 + V r^2 psi^2) dr with P1
    // elements; the mass matrix is positive, so negative generalized
    // eigenvalues = negative eigenvalues of the stiffness-plus-potential matrix
    Vector d3 = Vector::Zero(n), s3 = Vector::Zero(n - 1);
    auto r3 = [](double r) { return r * r * r; };
    for (int e = 0; e <= n; ++e) {  // element (r_e, r_{e+1}), nodes e-1 and e
        double ra = e * h, rb = (e + 1) * h;
        double k = (r3(rb) - r3(ra)) / (3.0 * h * h);
        if (e >= 1) d3[e - 1] += k;
        if (e <= n - 1) d3[e] += k;
        if (e >= 1 && e <= n - 1) s3[e - 1] -= k;
    }
    for (int i = 0; i < n; ++i) {
        double r = (i + 1) * h;
        d3[i] += V(r) * r * r * h;  // lumped potential term
    }
    long count_3d = tridiag_negative_count(d3, s3);
    return {count_1d, count_3d};
}

std::pair<long, long> log_substitution_check(const std::function<double(double)>& V,
                                             double X, int n) {
    // H2 = -d^2 - 1/(4x^2) + V on (1, X)
    double h = (X - 1.0) / (n + 1);
    Vector d(n), s = Vector::Constant(n - 1, -1.0 / (h * h));
    for (int i = 0; i < n; ++i) {
        double x = 1.0 + (i + 1) * h;
        d[i] = 2.0 / (h * h) - 0.25 / (x * x) + V(x);
    }
    long count_orig = tridiag_negative_count(d, s);

    // -d^2 + e^{2t} V(e^t) on (0, ln X)
    double L = std::log(X);
    double ht = L / (n + 1);
    Vector dt(n), st = Vector::Constant(n - 1, -1.0 / (ht * ht));
    for (int i = 0; i < n; ++i) {
        double t = (i + 1) * ht;
        dt[i] = 2.0 / (ht * ht) + std::exp(2.0 * t) * V(std::exp(t));
    }
    long count_trans = tridiag_negative_count(dt, st);
    return {count_orig, count_trans};
}

double region_A_bound(double lambda, double alpha, double q, const RegionSpec& spec,
                      double C_q) {
    if (q <= 1) throw std::invalid_argument("region_A_bound: requires q > 1");
    PartitionOfUnity pou = partition(spec);
    const double r_max = std::pow(2.0, 0.75) * spec.kappa * std::sqrt(spec.M);

    auto integrand = [&](double r, double phi) {
        double x = r * std::cos(phi), y = r * std::sin(phi);
        double rho = std::pow(1.0 + r * r, -alpha / 2.0);
        double va = x * x * y * y - r - lambda * rho - pou.v_chi_xy(x, y);
        if (va >= 0) return 0.0;
        double lr = std::abs(std::log(r));
        return std::pow(-va, q) * std::pow(1.0 + lr, 2.0 * q - 1.0) *
               std::pow(r, 2.0 * q - 1.0);
    };
    // eight-fold symmetry of the potential: integrate one half-valley sector
    auto res = quad::integrate2d(integrand, 1e-12, r_max,
                                 [](double) { return 0.0; },
                                 [](double) { return M_PI / 4.0; }, 1e-9, 1e-7);
    return 2.0 + 2.0 * C_q * 8.0 * res.value;
}

FiberedPotential shifted_oscillator_potential(double lambda, double alpha) {
    FiberedPotential pot;
    pot.domain_lo = 1.0;
    pot.levels = [lambda, alpha](double x) {
        std::vector<double> out;
        double shift = lambda * std::pow(x, -alpha);
        for (int k = 0;; ++k) {
            double level = 2.0 * k * x - shift;
            out.push_back(level);
            if (level >= 0) break;  // all later levels are positive
        }
        return out;
    };
    return pot;
}

}  // namespace x2y2
