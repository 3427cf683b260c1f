#include "x2y2/fiber.hpp"

#include <Eigen/Eigenvalues>

namespace x2y2 {

FiberGrid FiberGrid::for_epsilon(double eps, double max_h) {
    double T = std::max(12.0, eps > 0 ? 6.0 * std::pow(eps, -0.25) : 0.0);
    int n = static_cast<int>(std::ceil(2.0 * T / max_h)) - 1;
    return FiberGrid(T, n);
}

double fiber_potential(double epsilon, double t) {
    double w = 1.0 + epsilon * t * t;
    return 0.5 * t * t / std::sqrt(w) - 1.0 / (std::sqrt(2.0) * std::pow(w, 0.25));
}

FiberProblem assemble_fiber(double epsilon, const FiberGrid& grid) {
    if (epsilon < 0) throw std::invalid_argument("assemble_fiber: epsilon must be >= 0");
    FiberProblem p{epsilon, grid, Vector(grid.n_interior), 0.0};
    double h = grid.h();
    double c = 1.0 / (h * h);
    p.offdiag = -c;
    for (int i = 0; i < grid.n_interior; ++i)
        p.diag[i] = 2.0 * c + fiber_potential(epsilon, grid.t_at(i));
    return p;
}

FiberProblem assemble_fiber(double epsilon) {
    return assemble_fiber(epsilon, FiberGrid::for_epsilon(epsilon));
}

SparseHermitianOperator FiberProblem::to_operator() const {
    SparseHermitianOperator op;
    long n = diag.size();
    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(3 * n);
    for (long i = 0; i < n; ++i) {
        trips.emplace_back(i, i, diag[i]);
        if (i + 1 < n) {
            trips.emplace_back(i, i + 1, offdiag);
            trips.emplace_back(i + 1, i, offdiag);
        }
    }
    op.mat.resize(n, n);
    op.mat.setFromTriplets(trips.begin(), trips.end());
    op.kind = OperatorKind::Other;
    return op;
}

namespace {

Eigen::VectorXd tridiag_eigenvalues(const Vector& diag, double off) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(diag.size() - 1, off);
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

}  // namespace

std::vector<double> fiber_eigenvalues(const FiberProblem& p, int k) {
    Eigen::VectorXd ev = tridiag_eigenvalues(p.diag, p.offdiag);
    k = std::min<long>(k, ev.size());
    return {ev.data(), ev.data() + k};
}

double ground_energy(const FiberProblem& p) { return fiber_eigenvalues(p, 1)[0]; }

GroundResult ground_energy_checked(const FiberProblem& p) {
    double coarse = ground_energy(p);
    FiberProblem fine = assemble_fiber(p.epsilon, p.grid.refined());
    double f = ground_energy(fine);
    // second-order stencil: Richardson error of the fine value is (coarse-f)/3
    double rich = std::abs(coarse - f) / 3.0;
    return {f, std::max(1e-6, 3.0 * rich)};
}

double excitation_gap(const FiberProblem& p) {
    auto ev = fiber_eigenvalues(p, 2);
    return ev[1] - ev[0];
}

GroundProjector GroundProjector::on_grid(const FiberGrid& grid) {
    GroundProjector g;
    g.h = grid.h();
    g.phi0.resize(grid.n_interior);
    const double norm_c = std::pow(std::sqrt(2.0) * M_PI, -0.25);
    for (int i = 0; i < grid.n_interior; ++i) {
        double t = grid.t_at(i);
        g.phi0[i] = norm_c * std::exp(-t * t / (2.0 * std::sqrt(2.0)));
    }
    g.phi0 /= std::sqrt(g.h) * g.phi0.norm();  // discrete L2 normalization
    return g;
}

bool projector_bound_check(const FiberProblem& p, double a, double c, double tol_disc,
                           double* min_eig) {
    long n = p.diag.size();
    GroundProjector g = GroundProjector::on_grid(p.grid);
    // H - c I - (a - c) P0, with P0 = h phi0 phi0^T
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (long i = 0; i < n; ++i) {
        m(i, i) = p.diag[i] - c;
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = p.offdiag;
    }
    m -= (a - c) * g.h * g.phi0 * g.phi0.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    double e0 = es.eigenvalues()(0);
    if (min_eig) *min_eig = e0;
    return e0 >= -tol_disc;
}

namespace {

// H_u on a symmetric v-grid wide enough for the u^(1/4)-scale ground state.
FiberProblem assemble_valley(double u, double shift) {
    double T = std::max(12.0, 14.0 * std::pow(u, 0.25));
    int n = static_cast<int>(std::ceil(2.0 * T / 0.02)) - 1;
    n = std::min(n, 20000);
    FiberGrid grid(T, n);
    FiberProblem p{0.0, grid, Vector(n), 0.0};
    double h = grid.h();
    double c = 1.0 / (h * h);
    p.offdiag = -c;
    for (int i = 0; i < n; ++i) {
        double v = grid.t_at(i);
        double w = std::hypot(u, v);
        double pot = 0.5 * v * v / w - 1.0 / (std::sqrt(2.0) * std::sqrt(w));
        p.diag[i] = 2.0 * c + pot - shift;
    }
    return p;
}

}  // namespace

long valley_fiber_counts(double u, double lambda, double alpha, double /*delta*/) {
    if (u <= 0) throw std::invalid_argument("valley_fiber_counts: u must be positive");
    double shift = lambda * std::pow(u, -1.0 - alpha / 2.0);
    FiberProblem p = assemble_valley(u, shift);
    Eigen::VectorXd ev = tridiag_eigenvalues(p.diag, p.offdiag);
    long count = 0;
    for (long i = 0; i < ev.size() && ev[i] < 0; ++i) ++count;
    return count;
}

std::vector<double> valley_operator_eigenvalues(double u, int k) {
    FiberProblem p = assemble_valley(u, 0.0);
    return fiber_eigenvalues(p, k);
}

std::vector<double> shifted_oscillator_levels(double x, double lambda, double alpha,
                                              int k_max) {
    if (x <= 0) throw std::invalid_argument("shifted_oscillator_levels: x must be positive");
    std::vector<double> levels;
    levels.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        levels.push_back(2.0 * k * x - lambda * std::pow(x, -alpha));
    return levels;
}

}  // namespace x2y2
