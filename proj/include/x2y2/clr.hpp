#pragma once

#include <functional>

#include "x2y2/geometry.hpp"
#include "x2y2/types.hpp"

namespace x2y2 {

// Map x -> fiber eigenvalues (truncated spectrum of the operator-valued
// potential V(x)); the truncation must discard only positive levels.
struct FiberedPotential {
    std::function<std::vector<double>(double)> levels;
    double domain_lo = 1.0;
    int truncation_rank = 0;
};

struct BoundConstants {
    double C3 = 0.1156;  // literature value, configuration input
    double C_q = 1.0;
    double q = 1.2;

    BoundConstants() = default;
    BoundConstants(double c3, double cq, double q_) : C3(c3), C_q(cq), q(q_) {
        if (c3 <= 0 || cq <= 0) throw std::invalid_argument("BoundConstants: constants must be positive");
        if (q_ <= 1) throw std::invalid_argument("BoundConstants: q must exceed 1");
    }
};

struct DivergentIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sum |min(level,0)|^p
double negative_trace_power(const std::vector<double>& levels, double p);

// 4 pi C3 * int_lo^inf tr|V(x)_-|^(3/2) x^2 dx; throws DivergentIntegral when
// the tail fails to decay.
double clr_halfline(const FiberedPotential& pot, double C3);

// 4 pi C3 * int tr|V(x)_-|^(3/2) x^2 (ln x)^2 dx on (1, inf).
double clr_log_weighted(const FiberedPotential& pot, double C3);

// 8 pi C3 int_1^inf (1 + lambda/2) (lambda x^-alpha)^(3/2) x^2 (ln x)^2 dx,
// evaluated in closed form and by quadrature (must agree to 1e-8 relative).
double cartesian_region_bound(double lambda, double alpha, const BoundConstants& consts);

// C(alpha) + 2^12 pi C3 / (27 (alpha-2)^3) * lambda^(3/2 - eps_alpha)
double theorem1_bound(double lambda, double alpha, const BoundConstants& consts,
                      double C_alpha, double eps_alpha);

// Discrete count for -d^2/dx^2 + V on the half-line vs the radial 3-D form
// -(1/r) d^2/dr^2 r + V under an independent (FEM) discretization.
std::pair<long, long> radial_lift_check(const std::function<double(double)>& V,
                                        double r_max, int n);

// Count for H2 = -d^2 - 1/(4x^2) + V on (1,X) vs -d^2 + e^{2t} V(e^t) on (0, ln X).
std::pair<long, long> log_substitution_check(const std::function<double(double)>& V,
                                             double X, int n);

// Quadrature in polar coordinates of the 2-D counting-bound integrand over the
// bounded region where V_A = x^2 y^2 - sqrt(x^2+y^2) - lambda rho - V_chi < 0.
double region_A_bound(double lambda, double alpha, double q, const RegionSpec& spec,
                      double C_q = 1.0);

// Operator-valued potential of the Dirichlet strip x > 1: the shifted
// transverse oscillator with levels 2 k x - lambda x^(-alpha), truncated at the
// first nonnegative level.
FiberedPotential shifted_oscillator_potential(double lambda, double alpha);

}  // namespace x2y2
