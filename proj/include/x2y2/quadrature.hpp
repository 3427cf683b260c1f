#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace x2y2::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;     // estimated absolute error
    bool converged = true;
    bool divergent = false;  // improper integral failed to settle
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1].
// Column layout: node, Gauss weight, Kronrod weight.
inline constexpr double g7k15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
inline double g7k15_panel(const F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double y0 = f(mid);
    double g7 = g7k15[0][1] * y0;
    double k15 = g7k15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = half * g7k15[i][0];
        double yi = f(mid + dx) + f(mid - dx);
        g7 += g7k15[i][1] * yi;
        k15 += g7k15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    err = std::abs(k15 - g7);
    // standard QUADPACK-style error sharpening
    err = 200.0 * err;
    err = err * std::sqrt(err) / 200.0;
    if (!std::isfinite(err)) err = std::abs(k15 - g7);
    return k15;
}

}  // namespace detail

// Adaptive integration of f over the finite interval [a,b].
template <class F>
Result integrate(const F& f, double a, double b, double abs_tol = 1e-10,
                 double rel_tol = 1e-8, int max_panels = 4000) {
    struct Panel {
        double a, b, value, error;
    };
    Result res;
    if (a == b) return res;

    std::vector<Panel> panels;
    double e0;
    double v0 = detail::g7k15_panel(f, a, b, e0);
    panels.push_back({a, b, v0, e0});
    double total = v0, total_err = e0;

    int splits = 0;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) &&
           splits < max_panels) {
        // split the worst panel
        size_t worst = 0;
        for (size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        Panel p = panels[worst];
        double m = 0.5 * (p.a + p.b);
        if (m <= p.a || m >= p.b) break;  // interval exhausted at machine precision
        double el, er;
        double vl = detail::g7k15_panel(f, p.a, m, el);
        double vr = detail::g7k15_panel(f, m, p.b, er);
        total += vl + vr - p.value;
        total_err += el + er - p.error;
        panels[worst] = {p.a, m, vl, el};
        panels.push_back({m, p.b, vr, er});
        ++splits;
    }
    // recompute the error sum to avoid cancellation drift
    total_err = 0;
    for (const auto& p : panels) total_err += p.error;

    res.value = total;
    res.error = total_err;
    res.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total)) * 10;
    return res;
}

// Integration of f over [a, infinity). Doubles the truncation point until the
// tail contribution is negligible relative to the peak; flags divergence when
// the tail contributions fail to decay.
template <class F>
Result integrate_to_infinity(const F& f, double a, double abs_tol = 1e-10,
                             double rel_tol = 1e-8) {
    Result total;
    double left = a;
    double width = std::max(1.0, std::abs(a));
    double prev_chunk = 0.0;
    bool have_prev = false;
    int stagnant = 0;
    for (int iter = 0; iter < 60; ++iter) {
        double right = left + width;
        Result chunk = integrate(f, left, right, abs_tol / 4, rel_tol / 4);
        total.value += chunk.value;
        total.error += chunk.error;
        double mag = std::abs(chunk.value);
        if (mag <= std::max(abs_tol, rel_tol * std::abs(total.value))) {
            // one more confirmation chunk, then stop
            if (++stagnant >= 2) return total;
        } else {
            stagnant = 0;
        }
        if (have_prev && prev_chunk > 0 && mag >= 0.95 * prev_chunk && iter > 8) {
            total.divergent = true;
            total.converged = false;
            return total;
        }
        prev_chunk = mag;
        have_prev = true;
        left = right;
        width *= 2.0;
    }
    total.divergent = true;
    total.converged = false;
    return total;
}

// Nested adaptive 2-D quadrature over [ax,bx] x [ay(x), by(x)].
template <class F, class Ay, class By>
Result integrate2d(const F& f, double ax, double bx, const Ay& ay, const By& by,
                   double abs_tol = 1e-10, double rel_tol = 1e-8) {
    double inner_err = 0.0;
    auto outer = [&](double x) {
        Result inner = integrate([&](double y) { return f(x, y); }, ay(x), by(x),
                                 abs_tol / 10, rel_tol / 10);
        inner_err = std::max(inner_err, inner.error);
        return inner.value;
    };
    Result r = integrate(outer, ax, bx, abs_tol, rel_tol);
    r.error += inner_err;
    return r;
}

}  // namespace x2y2::quad
