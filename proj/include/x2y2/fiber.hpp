#pragma once

#include "x2y2/types.hpp"

namespace x2y2 {

// Symmetric 1-D Dirichlet grid on [-T, T]; n interior points.
struct FiberGrid {
    double half_width;
    int n_interior;

    FiberGrid(double T, int n) : half_width(T), n_interior(n) {
        if (T <= 0 || n < 3) throw std::invalid_argument("FiberGrid: bad parameters");
    }
    double h() const { return 2.0 * half_width / (n_interior + 1); }
    double t_at(int i) const { return -half_width + (i + 1) * h(); }

    // half-width max(12, 6 eps^(-1/4)) keeps the flattening potential confined;
    // n chosen for h <= 0.02.
    static FiberGrid for_epsilon(double eps, double max_h = 0.02);
    FiberGrid refined() const { return FiberGrid(half_width, 2 * n_interior + 1); }
};

// Rescaled valley fiber operator with potential
// V(eps,t) = t^2 / (2 sqrt(1+eps t^2)) - 1 / (sqrt(2) (1+eps t^2)^(1/4)).
struct FiberProblem {
    double epsilon;
    FiberGrid grid;
    Vector diag;      // tridiagonal main diagonal (stencil + potential)
    double offdiag;   // uniform off-diagonal -1/h^2

    SparseHermitianOperator to_operator() const;
};

double fiber_potential(double epsilon, double t);

FiberProblem assemble_fiber(double epsilon, const FiberGrid& grid);
FiberProblem assemble_fiber(double epsilon);  // default grid for this epsilon

// k lowest eigenvalues of the tridiagonal problem (QL on the tridiagonal form).
std::vector<double> fiber_eigenvalues(const FiberProblem& p, int k);

struct GroundResult {
    double value;
    double tol_disc;  // max(1e-6, 3 * Richardson error from one grid refinement)
};

double ground_energy(const FiberProblem& p);
GroundResult ground_energy_checked(const FiberProblem& p);

double excitation_gap(const FiberProblem& p);

// Exact oscillator ground state of H_hat(0), sampled and renormalized on the grid.
struct GroundProjector {
    Vector phi0;  // nodal values, discrete norm h*|phi0|^2 = 1
    double h;

    static GroundProjector on_grid(const FiberGrid& grid);
};

// min eig of (H_hat(eps) - a P0 - c P0_perp) >= -tol_disc ?
bool projector_bound_check(const FiberProblem& p, double a, double c,
                           double tol_disc = 1e-6, double* min_eig = nullptr);

// Count of negative eigenvalues of H_u - lambda u^(-1-alpha/2) on a v-grid.
long valley_fiber_counts(double u, double lambda, double alpha, double delta = 0.8);

// Low-lying spectrum of the unscaled H_u (for the scaling covariance check).
std::vector<double> valley_operator_eigenvalues(double u, int k);

// Analytic shifted-oscillator fiber levels 2 k x - lambda x^(-alpha), k = 0..k_max.
std::vector<double> shifted_oscillator_levels(double x, double lambda, double alpha,
                                              int k_max);

}  // namespace x2y2
