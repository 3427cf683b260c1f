#pragma once

#include "x2y2/types.hpp"

namespace x2y2 {

struct SpectralResult {
    std::vector<double> eigenvalues;     // sorted ascending
    std::vector<double> residual_norms;  // |Av - lv| / max(1, |A|_est) per pair
    std::string solver;                  // "iterative" | "dense"
    int iterations = 0;
    std::vector<ComplexVector> eigenvectors;  // optional, same order
};

struct CountResult {
    long n_negative = 0;
    double shift = 0.0;
    std::string method;  // "inertia" | "dense"
    double perturbation = 0.0;  // nonzero when a pivot-breakdown retry was needed
    double alpha = 0.0, lambda = 0.0;
    double box_half_width = 0.0;
    int box_n = 0;
};

struct NonConvergence : std::runtime_error {
    SpectralResult best;
    explicit NonConvergence(SpectralResult r)
        : std::runtime_error("eigensolver did not converge"), best(std::move(r)) {}
};

// k smallest eigenpairs by Lanczos with full reorthogonalization; the starting
// vector comes from a fixed-seed generator, so results are reproducible.
SpectralResult lowest_eigenpairs(const SparseHermitianOperator& op, int k, double tol,
                                 int max_iter = 0, bool want_vectors = false);

// Full dense spectrum, small-instance oracle.
SpectralResult dense_spectrum(const SparseHermitianOperator& op, long dim_cap = 4000);

// Exact count of eigenvalues < shift via LDL^T inertia. On pivot breakdown the
// shift is perturbed by +-eta, eta = 1e-8 * |op|_inf, and the perturbation is
// reported in the result.
CountResult count_negative(const SparseHermitianOperator& op, double shift = 0.0);

// Dense-oracle variant of count_negative.
CountResult count_negative_dense(const SparseHermitianOperator& op, double shift = 0.0);

}  // namespace x2y2
