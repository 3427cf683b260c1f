#include "x2y2/geometry.hpp"

namespace x2y2 {

std::string to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B1: return "B1";
        case Region::B2: return "B2";
        case Region::B3: return "B3";
        case Region::B4: return "B4";
    }
    return "?";
}

std::pair<double, double> to_parabolic(double x, double y) {
    return {0.5 * (x * x - y * y), x * y};
}

std::pair<double, double> from_parabolic(double u, double v) {
    if (v == 0.0 && u <= 0.0)
        throw std::invalid_argument("from_parabolic: point on the slit");
    double w = std::hypot(u, v);
    double x = std::sqrt(w + u);
    double y = (v >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, w - u));
    // w - u suffers cancellation for v^2 << u^2; recover y from v = xy
    if (x > 0 && std::abs(v) < 1e-3 * w) y = v / x;
    return {x, y};
}

double scale_factor(double u, double v) {
    if (u == 0.0 && v == 0.0)
        throw std::invalid_argument("scale_factor: map is not conformal at the origin");
    return std::pow(2.0, -0.5) * std::pow(u * u + v * v, -0.25);
}

Region classify(double x, double y, const RegionSpec& spec) {
    double u = 0.5 * (x * x - y * y);
    if (std::abs(u) <= spec.M) return Region::A;
    if (u > spec.M) return x > 0 ? Region::B1 : Region::B2;
    return y > 0 ? Region::B3 : Region::B4;
}

namespace {

// C-infinity step: 0 for tau <= 0, 1 for tau >= 1.
double smoothstep(double tau) {
    if (tau <= 0.0) return 0.0;
    if (tau >= 1.0) return 1.0;
    double a = std::exp(-1.0 / tau);
    double b = std::exp(-1.0 / (1.0 - tau));
    return a / (a + b);
}

double smoothstep_derivative(double tau) {
    if (tau <= 0.0 || tau >= 1.0) return 0.0;
    double a = std::exp(-1.0 / tau);
    double b = std::exp(-1.0 / (1.0 - tau));
    double ap = a / (tau * tau);
    double bp = -b / ((1.0 - tau) * (1.0 - tau));
    double s = a + b;
    return (ap * s - a * (ap + bp)) / (s * s);
}

}  // namespace

// chi_A = cos(theta), chi_B = sin(theta), theta = pi/2 * step((|u|-M)/(k^2 M - M)),
// so chi_A^2 + chi_B^2 = 1 identically and V_chi^uv = theta'^2.
double PartitionOfUnity::chi_A(double u) const {
    double width = (spec.kappa * spec.kappa - 1.0) * spec.M;
    double tau = (std::abs(u) - spec.M) / width;
    return std::cos(M_PI_2 * smoothstep(tau));
}

double PartitionOfUnity::chi_B(double u) const {
    double width = (spec.kappa * spec.kappa - 1.0) * spec.M;
    double tau = (std::abs(u) - spec.M) / width;
    return std::sin(M_PI_2 * smoothstep(tau));
}

double PartitionOfUnity::v_chi_uv(double u) const {
    double width = (spec.kappa * spec.kappa - 1.0) * spec.M;
    double tau = (std::abs(u) - spec.M) / width;
    double theta_prime = M_PI_2 * smoothstep_derivative(tau) / width;
    return theta_prime * theta_prime;
}

double PartitionOfUnity::v_chi_xy(double x, double y) const {
    double u = 0.5 * (x * x - y * y);
    return (x * x + y * y) * v_chi_uv(u);
}

double PartitionOfUnity::sup_v_chi() const {
    double lo = spec.M, hi = spec.kappa * spec.kappa * spec.M;
    double sup = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        double u = lo + (hi - lo) * i / 4000.0;
        sup = std::max(sup, v_chi_uv(u));
    }
    return sup;
}

PartitionOfUnity partition(const RegionSpec& spec) { return PartitionOfUnity{spec}; }

ValleyGeometry valley_geometry(double lambda, const RegionSpec& spec, double alpha,
                               double c1_override) {
    if (lambda < 0) throw std::invalid_argument("valley_geometry: lambda must be >= 0");
    double c1 = c1_override >= 0 ? c1_override : partition(spec).c1();
    double M2 = spec.M * spec.M;
    auto balance = [&](double r) {
        return -0.25 * r * r * r * r + r + lambda * std::pow(1.0 + r * r, -alpha / 2.0) +
               r * r * c1 / M2;
    };
    // balance(r) > 0 near 0+ (for lambda > 0, or r term); -> -inf as r -> inf
    double lo = 1e-8, hi = 2.0;
    while (balance(hi) > 0) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("valley_geometry: bracketing failed");
    }
    if (balance(lo) <= 0) throw std::runtime_error("valley_geometry: bracketing failed");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (balance(mid) > 0) lo = mid; else hi = mid;
        if (hi - lo < 4e-16 * hi) break;
    }
    ValleyGeometry g;
    g.r_lambda = 0.5 * (lo + hi);
    g.phi_r = [lambda, alpha](double r) {
        return std::sqrt(r + lambda * std::pow(r, -alpha)) / (r * r);
    };
    return g;
}

}  // namespace x2y2
