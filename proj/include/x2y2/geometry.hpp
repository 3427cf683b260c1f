#pragma once

#include <functional>

#include "x2y2/types.hpp"

namespace x2y2 {

enum class Region { A, B1, B2, B3, B4 };

std::string to_string(Region r);

// Region scale M, dilation kappa > 1 and valley-split fraction delta.
struct RegionSpec {
    double M = 1.0;
    double kappa = std::sqrt(2.0);
    double delta = 0.8;

    RegionSpec() = default;
    RegionSpec(double m, double k, double d = 0.8) : M(m), kappa(k), delta(d) {
        if (m <= 0 || k <= 1 || d <= 0 || d >= 1)
            throw std::invalid_argument("RegionSpec: need M > 0, kappa > 1, 0 < delta < 1");
    }
};

// (u,v) = (1/2 (x^2 - y^2), xy)
std::pair<double, double> to_parabolic(double x, double y);

// Right-half-plane preimage, x > 0. The slit v = 0, u <= 0 is rejected.
std::pair<double, double> from_parabolic(double u, double v);

// h = 2^(-1/2) (u^2+v^2)^(-1/4) = (x^2+y^2)^(-1/2); origin rejected.
double scale_factor(double u, double v);

// Closed A (|u| <= M), half-open B's; B2..B4 are the reflections of B1 in
// the symmetry lines x = 0 and x = y.
Region classify(double x, double y, const RegionSpec& spec);

// chi_A^2 + chi_B^2 = 1 built from a smoothstep in |u|; chi_A = 1 for
// |u| <= M, chi_B = 1 for |u| >= kappa^2 M. The localization potential in
// (u,v) coordinates is V_chi^uv = theta'(u)^2, independent of v.
struct PartitionOfUnity {
    RegionSpec spec;

    double chi_A(double u) const;
    double chi_B(double u) const;
    double v_chi_uv(double u) const;                // |grad_uv chi_A|^2 + |grad_uv chi_B|^2
    double v_chi_xy(double x, double y) const;      // (x^2+y^2) * V_chi^uv
    double sup_v_chi() const;                       // numerically measured sup
    double c1() const { return sup_v_chi() * spec.M * spec.M; }  // sup V_chi * M^2
};

PartitionOfUnity partition(const RegionSpec& spec);

// Valley geometry: r_lambda solves -r^4/4 + r + lambda (1+r^2)^(-alpha/2)
// + r^2 c1 / M^2 = 0, and phi_r ~ (r + lambda r^-alpha)^(1/2) / r^2.
struct ValleyGeometry {
    double r_lambda;
    std::function<double(double)> phi_r;
};

ValleyGeometry valley_geometry(double lambda, const RegionSpec& spec, double alpha,
                               double c1_override = -1.0);

}  // namespace x2y2
