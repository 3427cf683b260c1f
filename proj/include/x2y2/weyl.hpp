#pragma once

#include "x2y2/quadrature.hpp"
#include "x2y2/types.hpp"

namespace x2y2 {

// Smooth bump on [1,2], L2-normalized: chi(s) = N exp(-1/((s-1)(2-s))).
struct CutoffProfile {
    double normalization;  // N, computed by quadrature so that int chi^2 = 1

    CutoffProfile();

    double value(double s) const;
    double derivative(double s) const;
    double second_derivative(double s) const;
};

// Normalized transverse oscillator ground state phi_x(y) = (x/pi)^(1/4) e^(-x y^2/2).
struct OscillatorGround {
    double x;
    explicit OscillatorGround(double x_) : x(x_) {
        if (x_ <= 0) throw std::invalid_argument("OscillatorGround: x must be positive");
    }
    double value(double y) const {
        return std::pow(x / M_PI, 0.25) * std::exp(-0.5 * x * y * y);
    }
    double dx(double y) const { return value(y) * (0.25 / x - 0.5 * y * y); }
    double dy(double y) const { return -x * y * value(y); }
};

// Trial spinor Psi_t(x,y) = chi_t(x) phi_x(y) xi with g1 xi = -xi,
// chi_t(x) = t^(-1/2) chi(x/t); supported in x in [t, 2t].
struct WeylState {
    double t;
    CutoffProfile profile;
    Eigen::Vector2cd xi;  // (1,-1)/sqrt(2)

    WeylState(double t_, CutoffProfile p);

    double chi_t(double x) const { return profile.value(x / t) / std::sqrt(t); }
    double chi_t_prime(double x) const {
        return profile.derivative(x / t) / (t * std::sqrt(t));
    }
    double envelope(double x, double y) const {  // scalar part of Psi_t
        return x > 0 ? chi_t(x) * OscillatorGround(x).value(y) : 0.0;
    }
    // squared L2 norm by quadrature (should be 1)
    double norm_squared(double* quad_error = nullptr) const;
};

WeylState weyl_state(double t, CutoffProfile profile = CutoffProfile());

// <Psi_t, H Psi_t> by 2-D adaptive quadrature with analytic derivatives.
double quadratic_form(const WeylState& state, double* quad_error = nullptr);

// <Psi_t, rho Psi_t> by quadrature; lies in (0, 1].
double weighted_norm(const WeylState& state, const WeightSpec& spec,
                     double* quad_error = nullptr);

// quadratic_form / weighted_norm.
double weighted_quotient(const WeylState& state, const WeightSpec& spec);

}  // namespace x2y2
