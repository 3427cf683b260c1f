#include "x2y2/operators.hpp"

namespace x2y2 {

std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::Laplacian: return "laplacian";
        case OperatorKind::Hamiltonian: return "hamiltonian";
        case OperatorKind::BosonicHamiltonian: return "bosonic";
        case OperatorKind::Supercharge: return "supercharge";
        case OperatorKind::Weight: return "weight";
        case OperatorKind::Shifted: return "shifted";
        default: return "other";
    }
}

OperatorKind operator_kind_from_string(const std::string& s) {
    if (s == "laplacian") return OperatorKind::Laplacian;
    if (s == "hamiltonian") return OperatorKind::Hamiltonian;
    if (s == "bosonic") return OperatorKind::BosonicHamiltonian;
    if (s == "supercharge") return OperatorKind::Supercharge;
    if (s == "weight") return OperatorKind::Weight;
    if (s == "shifted") return OperatorKind::Shifted;
    return OperatorKind::Other;
}

namespace {

void stamp_metadata(SparseHermitianOperator& op, const Box2D& box, OperatorKind kind,
                    int spinor) {
    op.kind = kind;
    op.spinor_components = spinor;
    op.box_half_width_x = box.half_width_x;
    op.box_half_width_y = box.half_width_y;
    op.box_n_x = box.n_x;
    op.box_n_y = box.n_y;
}

using Trip = Eigen::Triplet<Complex>;

// 5-point -Laplace triplets for a scalar or spinor layout.
void laplacian_triplets(const Box2D& box, int spinor, std::vector<Trip>& trips) {
    const int nx = box.interior_x(), ny = box.interior_y();
    const double cx = 1.0 / (box.h_x() * box.h_x());
    const double cy = 1.0 / (box.h_y() * box.h_y());
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            long node = static_cast<long>(i) * ny + j;
            for (int s = 0; s < spinor; ++s) {
                long row = node * spinor + s;
                trips.emplace_back(row, row, 2.0 * cx + 2.0 * cy);
                if (i > 0) trips.emplace_back(row, (node - ny) * spinor + s, -cx);
                if (i < nx - 1) trips.emplace_back(row, (node + ny) * spinor + s, -cx);
                if (j > 0) trips.emplace_back(row, (node - 1) * spinor + s, -cy);
                if (j < ny - 1) trips.emplace_back(row, (node + 1) * spinor + s, -cy);
            }
        }
    }
}

}  // namespace

Vector potential_values(const Box2D& box) {
    const int nx = box.interior_x(), ny = box.interior_y();
    Vector v(static_cast<long>(nx) * ny);
    for (int i = 0; i < nx; ++i) {
        double x = box.x_at(i);
        for (int j = 0; j < ny; ++j) {
            double y = box.y_at(j);
            v[static_cast<long>(i) * ny + j] = x * x * y * y;
        }
    }
    return v;
}

SparseHermitianOperator assemble_laplacian(const Box2D& box) {
    SparseHermitianOperator op;
    long n = box.n_interior();
    std::vector<Trip> trips;
    trips.reserve(5 * n);
    laplacian_triplets(box, 1, trips);
    op.mat.resize(n, n);
    op.mat.setFromTriplets(trips.begin(), trips.end());
    stamp_metadata(op, box, OperatorKind::Laplacian, 1);
    return op;
}

SparseHermitianOperator assemble_hamiltonian(const Box2D& box, bool supersymmetric) {
    SparseHermitianOperator op;
    const int nx = box.interior_x(), ny = box.interior_y();
    const long n = box.n_interior();
    const int spinor = supersymmetric ? 2 : 1;
    std::vector<Trip> trips;
    trips.reserve((5 + 2 * (spinor - 1)) * n * spinor);
    laplacian_triplets(box, spinor, trips);
    for (int i = 0; i < nx; ++i) {
        double x = box.x_at(i);
        for (int j = 0; j < ny; ++j) {
            double y = box.y_at(j);
            long node = static_cast<long>(i) * ny + j;
            double pot = x * x * y * y;
            if (supersymmetric) {
                // x*g1 couples the components, -y*g2 is diag(-y, y)
                trips.emplace_back(2 * node, 2 * node, pot - y);
                trips.emplace_back(2 * node + 1, 2 * node + 1, pot + y);
                trips.emplace_back(2 * node, 2 * node + 1, x);
                trips.emplace_back(2 * node + 1, 2 * node, x);
            } else {
                trips.emplace_back(node, node, pot);
            }
        }
    }
    op.mat.resize(n * spinor, n * spinor);
    op.mat.setFromTriplets(trips.begin(), trips.end());
    stamp_metadata(op, box,
                   supersymmetric ? OperatorKind::Hamiltonian : OperatorKind::BosonicHamiltonian,
                   spinor);
    return op;
}

SparseHermitianOperator assemble_supercharge(const Box2D& box) {
    SparseHermitianOperator op;
    const int nx = box.interior_x(), ny = box.interior_y();
    const long n = box.n_interior();
    const Complex I(0, 1);
    const Complex dx_coef = -I / (2.0 * box.h_x());
    const Complex dy_coef = -I / (2.0 * box.h_y());
    std::vector<Trip> trips;
    trips.reserve(10 * n);
    for (int i = 0; i < nx; ++i) {
        double x = box.x_at(i);
        for (int j = 0; j < ny; ++j) {
            double y = box.y_at(j);
            long node = static_cast<long>(i) * ny + j;
            // -i dx g1: off-diagonal in spinor space
            if (i < nx - 1) {
                long nb = node + ny;
                trips.emplace_back(2 * node, 2 * nb + 1, dx_coef);
                trips.emplace_back(2 * node + 1, 2 * nb, dx_coef);
            }
            if (i > 0) {
                long nb = node - ny;
                trips.emplace_back(2 * node, 2 * nb + 1, -dx_coef);
                trips.emplace_back(2 * node + 1, 2 * nb, -dx_coef);
            }
            // -i dy g2: diag(1,-1) in spinor space
            if (j < ny - 1) {
                long nb = node + 1;
                trips.emplace_back(2 * node, 2 * nb, dy_coef);
                trips.emplace_back(2 * node + 1, 2 * nb + 1, -dy_coef);
            }
            if (j > 0) {
                long nb = node - 1;
                trips.emplace_back(2 * node, 2 * nb, -dy_coef);
                trips.emplace_back(2 * node + 1, 2 * nb + 1, dy_coef);
            }
            // xy g3, with g3 = offdiag(i, -i)
            trips.emplace_back(2 * node, 2 * node + 1, I * (x * y));
            trips.emplace_back(2 * node + 1, 2 * node, -I * (x * y));
        }
    }
    op.mat.resize(2 * n, 2 * n);
    op.mat.setFromTriplets(trips.begin(), trips.end());
    stamp_metadata(op, box, OperatorKind::Supercharge, 2);
    return op;
}

SparseHermitianOperator assemble_weight(const Box2D& box, const WeightSpec& spec,
                                        int spinor_components) {
    if (spec.alpha < 0) throw std::invalid_argument("assemble_weight: alpha must be >= 0");
    SparseHermitianOperator op;
    const int nx = box.interior_x(), ny = box.interior_y();
    const long n = box.n_interior();
    std::vector<Trip> trips;
    trips.reserve(n * spinor_components);
    for (int i = 0; i < nx; ++i) {
        double x = box.x_at(i);
        for (int j = 0; j < ny; ++j) {
            double y = box.y_at(j);
            long node = static_cast<long>(i) * ny + j;
            double r = spec.rho(x, y);
            for (int s = 0; s < spinor_components; ++s)
                trips.emplace_back(node * spinor_components + s,
                                   node * spinor_components + s, r);
        }
    }
    op.mat.resize(n * spinor_components, n * spinor_components);
    op.mat.setFromTriplets(trips.begin(), trips.end());
    stamp_metadata(op, box, OperatorKind::Weight, spinor_components);
    op.alpha = spec.alpha;
    return op;
}

SparseHermitianOperator assemble_shifted(const Box2D& box, const WeightSpec& spec) {
    SparseHermitianOperator h = assemble_hamiltonian(box, true);
    SparseHermitianOperator w = assemble_weight(box, spec, 2);
    SparseHermitianOperator op;
    op.mat = h.mat - spec.lambda * w.mat;
    stamp_metadata(op, box, OperatorKind::Shifted, 2);
    op.alpha = spec.alpha;
    op.lambda = spec.lambda;
    return op;
}

}  // namespace x2y2
