#include "x2y2/weyl.hpp"

namespace x2y2 {

namespace {

double bump_raw(double s) {
    if (s <= 1.0 || s >= 2.0) return 0.0;
    double p = (s - 1.0) * (2.0 - s);
    return std::exp(-1.0 / p);
}

}  // namespace

CutoffProfile::CutoffProfile() {
    auto r = quad::integrate([](double s) { double b = bump_raw(s); return b * b; },
                             1.0, 2.0, 1e-14, 1e-12);
    normalization = 1.0 / std::sqrt(r.value);
}

double CutoffProfile::value(double s) const { return normalization * bump_raw(s); }

double CutoffProfile::derivative(double s) const {
    if (s <= 1.0 || s >= 2.0) return 0.0;
    double p = (s - 1.0) * (2.0 - s);
    double pp = 3.0 - 2.0 * s;
    return value(s) * pp / (p * p);
}

double CutoffProfile::second_derivative(double s) const {
    if (s <= 1.0 || s >= 2.0) return 0.0;
    double p = (s - 1.0) * (2.0 - s);
    double pp = 3.0 - 2.0 * s;
    // d/ds [ chi * pp/p^2 ] = chi' * pp/p^2 + chi * (pp/p^2)'
    double g = pp / (p * p);
    double gp = (-2.0 * p * p - pp * 2.0 * p * pp) / (p * p * p * p);
    return derivative(s) * g + value(s) * gp;
}

WeylState::WeylState(double t_, CutoffProfile p) : t(t_), profile(p) {
    if (t_ < 1.0) throw std::invalid_argument("WeylState: t must be >= 1");
    xi << Complex(1.0 / std::sqrt(2.0), 0), Complex(-1.0 / std::sqrt(2.0), 0);
}

WeylState weyl_state(double t, CutoffProfile profile) { return WeylState(t, profile); }

namespace {

// transverse half-width where the Gaussian tail is below 1e-35
double y_cut(double x) { return 9.0 / std::sqrt(x); }

}  // namespace

double WeylState::norm_squared(double* quad_error) const {
    auto r = quad::integrate2d(
        [this](double x, double y) {
            double e = envelope(x, y);
            return e * e;
        },
        t, 2.0 * t, [](double x) { return -y_cut(x); }, [](double x) { return y_cut(x); },
        1e-12, 1e-10);
    if (quad_error) *quad_error = r.error;
    return r.value;
}

double quadratic_form(const WeylState& state, double* quad_error) {
    // <xi, g1 xi> = -1 and <xi, g2 xi> = 0, so the integrand is
    // |dx Psi|^2 + |dy Psi|^2 + (x^2 y^2 - x) chi_t^2 phi_x^2.
    auto integrand = [&](double x, double y) {
        OscillatorGround phi(x);
        double c = state.chi_t(x), cp = state.chi_t_prime(x);
        double f = phi.value(y);
        double dxp = cp * f + c * phi.dx(y);
        double dyp = c * phi.dy(y);
        double env = c * f;
        return dxp * dxp + dyp * dyp + (x * x * y * y - x) * env * env;
    };
    auto r = quad::integrate2d(integrand, state.t, 2.0 * state.t,
                               [](double x) { return -y_cut(x); },
                               [](double x) { return y_cut(x); }, 1e-12, 1e-9);
    if (!r.converged)
        throw std::runtime_error("quadratic_form: quadrature failed, error estimate " +
                                 std::to_string(r.error));
    if (quad_error) *quad_error = r.error;
    return r.value;
}

double weighted_norm(const WeylState& state, const WeightSpec& spec,
                     double* quad_error) {
    auto integrand = [&](double x, double y) {
        double e = state.envelope(x, y);
        return e * e * spec.rho(x, y);
    };
    auto r = quad::integrate2d(integrand, state.t, 2.0 * state.t,
                               [](double x) { return -y_cut(x); },
                               [](double x) { return y_cut(x); }, 1e-12, 1e-9);
    if (!r.converged)
        throw std::runtime_error("weighted_norm: quadrature failed, error estimate " +
                                 std::to_string(r.error));
    if (quad_error) *quad_error = r.error;
    return r.value;
}

double weighted_quotient(const WeylState& state, const WeightSpec& spec) {
    return quadratic_form(state) / weighted_norm(state, spec);
}

}  // namespace x2y2
