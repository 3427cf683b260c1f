#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace x2y2 {

using Complex = std::complex<double>;
using SparseComplex = Eigen::SparseMatrix<Complex>;
using SparseReal = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;

// Rectangular Dirichlet box [-Lx,Lx] x [-Ly,Ly]. Grid points include the
// boundary; only the interior nodes carry unknowns.
struct Box2D {
    double half_width_x;
    double half_width_y;
    int n_x;  // grid points along x including both boundary points
    int n_y;

    Box2D(double lx, double ly, int nx, int ny)
        : half_width_x(lx), half_width_y(ly), n_x(nx), n_y(ny) {
        if (nx < 3 || ny < 3)
            throw std::invalid_argument("Box2D: need at least 3 grid points per axis");
        if (lx <= 0 || ly <= 0)
            throw std::invalid_argument("Box2D: half widths must be positive");
    }

    // Square box with spacing <= h.
    static Box2D with_spacing(double half_width, double h) {
        int n = static_cast<int>(std::ceil(2.0 * half_width / h)) + 1;
        return Box2D(half_width, half_width, n, n);
    }

    double h_x() const { return 2.0 * half_width_x / (n_x - 1); }
    double h_y() const { return 2.0 * half_width_y / (n_y - 1); }
    int interior_x() const { return n_x - 2; }
    int interior_y() const { return n_y - 2; }
    long n_interior() const { return static_cast<long>(interior_x()) * interior_y(); }

    double x_at(int i) const { return -half_width_x + (i + 1) * h_x(); }  // interior index
    double y_at(int j) const { return -half_width_y + (j + 1) * h_y(); }
};

// Weight rho(x,y) = (1 + x^2 + y^2)^(-alpha/2) and the shift H - lambda*rho.
struct WeightSpec {
    double alpha = 0.0;
    double lambda = 0.0;

    explicit WeightSpec(double a, double l = 0.0) : alpha(a), lambda(l) {
        if (a < 0) throw std::invalid_argument("WeightSpec: alpha must be >= 0");
    }

    double rho(double x, double y) const {
        return std::pow(1.0 + x * x + y * y, -alpha / 2.0);
    }
};

// Fixed 2x2 gamma representation: gamma2 diagonal, the rest any completion
// of the Clifford algebra.
struct PauliAlgebra {
    Matrix2c gamma1;  // offdiag(1,1)
    Matrix2c gamma2;  // diag(1,-1)
    Matrix2c gamma3;  // the completion with Q^2 = H: (0,1) entry i, (1,0) entry -i

    PauliAlgebra() {
        gamma1 << 0, 1, 1, 0;
        gamma2 << 1, 0, 0, -1;
        gamma3 << 0, Complex(0, 1), Complex(0, -1), 0;
    }
};

enum class OperatorKind {
    Laplacian,
    Hamiltonian,
    BosonicHamiltonian,
    Supercharge,
    Weight,
    Shifted,
    Other,
};

std::string to_string(OperatorKind k);
OperatorKind operator_kind_from_string(const std::string& s);

// Assembled discrete operator on the box (scalar, or spinor with the
// C^2 index fastest-varying). Hermitian by construction.
struct SparseHermitianOperator {
    SparseComplex mat;
    OperatorKind kind = OperatorKind::Other;
    int spinor_components = 1;  // 1 scalar, 2 spinor
    double box_half_width_x = 0, box_half_width_y = 0;
    int box_n_x = 0, box_n_y = 0;
    double alpha = 0, lambda = 0;

    long dimension() const { return mat.rows(); }

    bool is_real() const {
        for (int k = 0; k < mat.outerSize(); ++k)
            for (SparseComplex::InnerIterator it(mat, k); it; ++it)
                if (it.value().imag() != 0.0) return false;
        return true;
    }

    SparseReal real_view() const {
        SparseReal r(mat.rows(), mat.cols());
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(mat.nonZeros());
        for (int k = 0; k < mat.outerSize(); ++k)
            for (SparseComplex::InnerIterator it(mat, k); it; ++it)
                trips.emplace_back(it.row(), it.col(), it.value().real());
        r.setFromTriplets(trips.begin(), trips.end());
        return r;
    }

    double inf_norm() const {
        Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(mat.rows());
        for (int k = 0; k < mat.outerSize(); ++k)
            for (SparseComplex::InnerIterator it(mat, k); it; ++it)
                rowsum[it.row()] += std::abs(it.value());
        return rowsum.maxCoeff();
    }
};

}  // namespace x2y2
