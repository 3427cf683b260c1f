#include <doctest.h>

#include <cstdio>

#include "x2y2/eigensolve.hpp"
#include "x2y2/io.hpp"
#include "x2y2/operators.hpp"

using namespace x2y2;

namespace {

// sample a smooth two-component spinor onto the interior grid
ComplexVector sample_spinor(const Box2D& box,
                            const std::function<Complex(double, double, int)>& f) {
    ComplexVector v(2 * box.n_interior());
    for (int i = 0; i < box.interior_x(); ++i)
        for (int j = 0; j < box.interior_y(); ++j) {
            long node = static_cast<long>(i) * box.interior_y() + j;
            v[2 * node] = f(box.x_at(i), box.y_at(j), 0);
            v[2 * node + 1] = f(box.x_at(i), box.y_at(j), 1);
        }
    return v;
}

double hermiticity_defect(const SparseComplex& m) {
    SparseComplex d = SparseComplex(m.adjoint()) - m;
    double worst = 0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SparseComplex::InnerIterator it(d, k); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    return worst;
}

}  // namespace

TEST_CASE("degenerate boxes are rejected") {
    CHECK_THROWS_AS(Box2D(1.0, 1.0, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(Box2D(-1.0, 1.0, 5, 5), std::invalid_argument);
}

TEST_CASE("laplacian: lowest eigenvalue of -Lap on (0,pi)^2 is 2 + O(h^2)") {
    // [-pi/2, pi/2]^2 is (0,pi)^2 shifted; the spectrum is the same
    double err_prev = -1;
    for (int n : {21, 41}) {
        Box2D box(M_PI / 2, M_PI / 2, n, n);
        auto lap = assemble_laplacian(box);
        auto s = dense_spectrum(lap);
        double err = std::abs(s.eigenvalues[0] - 2.0);
        CHECK(err < 10.0 * box.h_x() * box.h_x());
        if (err_prev > 0) CHECK(err < err_prev / 3.0);  // second order
        err_prev = err;
    }
}

TEST_CASE("laplacian: interior stencil rows annihilate constants") {
    Box2D box(1.0, 1.0, 9, 9);
    auto lap = assemble_laplacian(box);
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(lap.dimension());
    Eigen::VectorXcd r = lap.mat * ones;
    // nodes with all four neighbours interior see a zero row sum
    int ny = box.interior_y();
    for (int i = 1; i < box.interior_x() - 1; ++i)
        for (int j = 1; j < ny - 1; ++j)
            CHECK(std::abs(r[static_cast<long>(i) * ny + j]) < 1e-12);
}

TEST_CASE("hamiltonian: local matrix potential spectrum") {
    // interior node (x,y): 2x2 block has eigenvalues x^2y^2 -+ sqrt(x^2+y^2)
    Box2D box(2.0, 2.0, 5, 5);  // interior nodes at -1, 0, 1
    auto h = assemble_hamiltonian(box, true);
    Eigen::MatrixXcd dense(h.mat);
    int ny = box.interior_y();
    for (int i = 0; i < box.interior_x(); ++i)
        for (int j = 0; j < ny; ++j) {
            double x = box.x_at(i), y = box.y_at(j);
            long node = static_cast<long>(i) * ny + j;
            Eigen::Matrix2cd block = dense.block<2, 2>(2 * node, 2 * node);
            double kinetic = 2.0 / (box.h_x() * box.h_x()) + 2.0 / (box.h_y() * box.h_y());
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
            double lower = x * x * y * y - std::hypot(x, y);
            CHECK(es.eigenvalues()(0) == doctest::Approx(kinetic + lower).epsilon(1e-12));
            if (x == 0 && y == 0) {
                CHECK(block(0, 1) == Complex(0, 0));  // fermionic term vanishes
                CHECK(block(0, 0).real() == doctest::Approx(kinetic));
            }
        }
}

TEST_CASE("hamiltonian and supercharge are exactly Hermitian") {
    Box2D box(3.0, 2.0, 13, 11);
    CHECK(hermiticity_defect(assemble_hamiltonian(box, true).mat) == 0.0);
    CHECK(hermiticity_defect(assemble_hamiltonian(box, false).mat) == 0.0);
    CHECK(hermiticity_defect(assemble_supercharge(box).mat) == 0.0);
    CHECK(hermiticity_defect(assemble_laplacian(box).mat) == 0.0);
}

TEST_CASE("pauli algebra relations for the fixed representation") {
    PauliAlgebra g;
    Matrix2c id = Matrix2c::Identity();
    for (const auto* m : {&g.gamma1, &g.gamma2, &g.gamma3}) {
        CHECK(((*m) * (*m) - id).norm() < 1e-15);
        CHECK(((*m) - m->adjoint()).norm() < 1e-15);
    }
    CHECK((g.gamma1 * g.gamma2 + g.gamma2 * g.gamma1).norm() < 1e-15);
    CHECK((g.gamma1 * g.gamma3 + g.gamma3 * g.gamma1).norm() < 1e-15);
    CHECK((g.gamma2 * g.gamma3 + g.gamma3 * g.gamma2).norm() < 1e-15);
}

TEST_CASE("supercharge on a constant spinor reduces to xy gamma3") {
    Box2D box(2.0, 2.0, 9, 9);
    auto q = assemble_supercharge(box);
    PauliAlgebra g;
    Eigen::Vector2cd xi(Complex(0.3, 0.1), Complex(-0.7, 0.2));
    ComplexVector psi = sample_spinor(box, [&](double, double, int s) { return xi[s]; });
    ComplexVector r = q.mat * psi;
    int ny = box.interior_y();
    // away from the boundary the centered differences of a constant vanish
    for (int i = 1; i < box.interior_x() - 1; ++i)
        for (int j = 1; j < ny - 1; ++j) {
            double x = box.x_at(i), y = box.y_at(j);
            long node = static_cast<long>(i) * ny + j;
            Eigen::Vector2cd expected = x * y * (g.gamma3 * xi);
            CHECK(std::abs(r[2 * node] - expected[0]) < 1e-12);
            CHECK(std::abs(r[2 * node + 1] - expected[1]) < 1e-12);
        }
}

TEST_CASE("SUSY form identity <Psi,H Psi> = |Q Psi|^2 under refinement") {
    auto spinor = [](double x, double y, int s) -> Complex {
        double g = std::exp(-(x * x + y * y));
        return s == 0 ? Complex(g, 0) : Complex(0.5 * g * x, 0.2 * g);
    };
    double prev_err = -1;
    for (double h : {0.4, 0.2, 0.1}) {
        Box2D box = Box2D::with_spacing(6.0, h);
        auto H = assemble_hamiltonian(box, true);
        auto Q = assemble_supercharge(box);
        ComplexVector psi = sample_spinor(box, spinor);
        double w = box.h_x() * box.h_y();
        double form = (psi.dot(H.mat * psi)).real() * w;
        double qnorm = (Q.mat * psi).squaredNorm() * w;
        double err = std::abs(form - qnorm);
        if (prev_err > 0) CHECK(err < prev_err / 1.8);
        prev_err = err;
    }
}

TEST_CASE("supersymmetric H is nonnegative up to discretization error") {
    Box2D box = Box2D::with_spacing(6.0, 0.25);
    auto H = assemble_hamiltonian(box, true);
    auto s = lowest_eigenpairs(H, 1, 1e-6);
    CHECK(s.eigenvalues[0] > -0.05);
}

TEST_CASE("bosonic H is positive semidefinite") {
    Box2D box(3.0, 3.0, 17, 17);
    auto hb = assemble_hamiltonian(box, false);
    auto s = dense_spectrum(hb);
    CHECK(s.eigenvalues[0] > -1e-8);
}

TEST_CASE("weight nodal values") {
    WeightSpec any_alpha(3.0, 1.0);
    CHECK(any_alpha.rho(0, 0) == 1.0);

    Box2D box(2.0, 2.0 * std::sqrt(2.0), 5, 5);  // interior x in {-1,0,1}, y in {-r2,0,r2}
    SUBCASE("alpha = 0 gives the identity") {
        auto w = assemble_weight(box, WeightSpec(0.0, 1.0));
        Eigen::MatrixXcd dense(w.mat);
        CHECK((dense - Eigen::MatrixXcd::Identity(w.dimension(), w.dimension())).norm() <
              1e-15);
    }
    SUBCASE("alpha = 2 at (1, sqrt 2) gives 1/4") {
        auto w = assemble_weight(box, WeightSpec(2.0, 1.0));
        int ny = box.interior_y();
        long node = static_cast<long>(2) * ny + 2;  // x = 1, y = sqrt(2)
        CHECK(std::abs(w.mat.coeff(node, node) - Complex(0.25, 0)) < 1e-14);
    }
    SUBCASE("negative alpha rejected") {
        CHECK_THROWS_AS(WeightSpec(-1.0, 1.0), std::invalid_argument);
    }
    SUBCASE("0 < diag <= 1 and monotone along rays for alpha > 0") {
        auto w = assemble_weight(box, WeightSpec(1.5, 1.0));
        for (int k = 0; k < w.mat.outerSize(); ++k)
            for (SparseComplex::InnerIterator it(w.mat, k); it; ++it) {
                CHECK(it.value().real() > 0.0);
                CHECK(it.value().real() <= 1.0);
            }
        WeightSpec spec(1.5, 1.0);
        double prev = 2.0;
        for (double r = 0.5; r < 8; r += 0.5) {
            double val = spec.rho(r * 0.6, r * 0.8);
            CHECK(val < prev);
            prev = val;
        }
    }
}

TEST_CASE("shifted operator") {
    Box2D box(2.0, 2.0, 7, 7);
    SUBCASE("lambda -> 0 recovers H exactly") {
        auto h = assemble_hamiltonian(box, true);
        auto hl = assemble_shifted(box, WeightSpec(3.0, 0.0));
        CHECK((Eigen::MatrixXcd(h.mat) - Eigen::MatrixXcd(hl.mat)).norm() == 0.0);
    }
    SUBCASE("diagonal at the origin node drops by exactly lambda") {
        double lambda = 2.5;
        auto h = assemble_hamiltonian(box, true);
        auto hl = assemble_shifted(box, WeightSpec(3.0, lambda));
        int ny = box.interior_y();
        long node = (static_cast<long>(box.interior_x() / 2) * ny + ny / 2) * 2;
        CHECK(std::abs((h.mat.coeff(node, node) - hl.mat.coeff(node, node)) -
                       Complex(lambda, 0)) < 1e-14);
    }
    SUBCASE("N(H_lambda) >= 1 for large lambda on a fixed box") {
        auto hl = assemble_shifted(box, WeightSpec(3.0, 50.0));
        CHECK(count_negative_dense(hl).n_negative >= 1);
    }
}

TEST_CASE("export / import round-trips bit-exactly") {
    Box2D box(2.0, 1.5, 7, 6);
    auto q = assemble_supercharge(box);
    q.alpha = 1.25;
    q.lambda = 0.7;
    std::string path = "roundtrip_op.txt";
    export_operator(q, path);
    auto back = import_operator(path);
    CHECK(back.dimension() == q.dimension());
    CHECK(back.kind == q.kind);
    CHECK(back.spinor_components == q.spinor_components);
    CHECK(back.alpha == q.alpha);
    CHECK(back.box_n_x == q.box_n_x);
    SparseComplex diff = back.mat - q.mat;
    double worst = 0;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (SparseComplex::InnerIterator it(diff, k); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    CHECK(worst == 0.0);
    std::remove(path.c_str());
    std::remove((path + ".json").c_str());
}
