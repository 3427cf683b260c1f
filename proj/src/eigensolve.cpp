#include "x2y2/eigensolve.hpp"

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

namespace x2y2 {

namespace {

ComplexVector seeded_start(long n, unsigned seed = 20240915u) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexVector v(n);
    for (long i = 0; i < n; ++i) v[i] = Complex(dist(gen), dist(gen));
    v /= v.norm();
    return v;
}

}  // namespace

SpectralResult lowest_eigenpairs(const SparseHermitianOperator& op, int k, double tol,
                                 int max_iter, bool want_vectors) {
    const long n = op.dimension();
    if (k < 1 || k >= n) throw std::invalid_argument("lowest_eigenpairs: bad k");
    if (tol <= 0) throw std::invalid_argument("lowest_eigenpairs: tol must be positive");
    if (max_iter == 0) max_iter = std::min<long>(n, std::max(500, 40 * k));  // per restart

    const double scale = std::max(1.0, op.inf_norm());
    const double slack = 10.0 * tol * scale;

    // Lock-and-deflate Lanczos. A single Krylov sequence never produces the
    // second copy of a degenerate eigenvalue, so converged pairs are locked and
    // each restart runs in their orthogonal complement. After k pairs are locked
    // the complement's lowest eigenvalue is converged too; if it still falls at
    // or below the k-th locked value it is a missed copy and gets locked, and
    // the process repeats until the complement lies strictly above.
    std::vector<ComplexVector> locked;
    std::vector<double> locked_vals;
    int iters_total = 0;
    bool failed = false;

    auto kth_value = [&]() {
        std::vector<double> v = locked_vals;
        std::sort(v.begin(), v.end());
        return v[k - 1];
    };
    auto make_result = [&]() {
        std::vector<size_t> order(locked_vals.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return locked_vals[a] < locked_vals[b]; });
        if ((int)order.size() > k) order.resize(k);
        SpectralResult res;
        res.solver = "iterative";
        res.iterations = iters_total;
        for (size_t idx : order) {
            double lam = locked_vals[idx];
            res.eigenvalues.push_back(lam);
            res.residual_norms.push_back(
                (op.mat * locked[idx] - lam * locked[idx]).norm() / scale);
            if (want_vectors) res.eigenvectors.push_back(locked[idx]);
        }
        return res;
    };

    bool verified = false;
    for (int restart = 0; restart < 2 * k + 6 && !failed && !verified; ++restart) {
        if ((long)locked.size() == n) { verified = true; break; }
        ComplexVector v0 = seeded_start(n, 20240915u + restart);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : locked) v0 -= q.dot(v0) * q;
        if (v0.norm() < 1e-12) continue;
        v0 /= v0.norm();

        std::vector<ComplexVector> basis{v0};
        std::vector<double> alpha, beta;
        Eigen::MatrixXd T;
        const int want = std::max(1, k - (int)locked.size());
        double new_min = 0.0;
        bool locked_any = false;

        for (int m = 1; m <= max_iter; ++m) {
            ++iters_total;
            const ComplexVector& v = basis.back();
            ComplexVector w = op.mat * v;
            double a = w.dot(v).real();
            alpha.push_back(a);
            w -= a * v;
            if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
            // full reorthogonalization against the basis and the locked pairs, twice
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& q : basis) w -= q.dot(w) * q;
                for (const auto& q : locked) w -= q.dot(w) * q;
            }
            double b = w.norm();

            int mm = static_cast<int>(alpha.size());
            T.setZero(mm, mm);
            for (int i = 0; i < mm; ++i) {
                T(i, i) = alpha[i];
                if (i + 1 < mm) T(i, i + 1) = T(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);

            bool invariant = b < 1e-14 * scale;
            bool exhausted = m == max_iter;
            int ready = 0;
            while (ready < std::min(want, mm)) {
                double est = invariant ? 0.0
                                       : b * std::abs(es.eigenvectors()(mm - 1, ready)) / scale;
                if (est > tol) break;
                ++ready;
            }
            if (ready >= std::min(want, mm) || invariant || exhausted) {
                int take = exhausted ? std::min(want, mm) : ready;
                for (int j = 0; j < take; ++j) {
                    ComplexVector vec = ComplexVector::Zero(n);
                    for (int i = 0; i < mm; ++i) vec += es.eigenvectors()(i, j) * basis[i];
                    double nrm = vec.norm();
                    if (nrm < 1e-12) continue;
                    vec /= nrm;
                    double lam = es.eigenvalues()(j);
                    double resid = (op.mat * vec - lam * vec).norm() / scale;
                    if (resid <= tol || exhausted) {
                        if (!locked_any || lam < new_min) new_min = lam;
                        locked.push_back(std::move(vec));
                        locked_vals.push_back(lam);
                        locked_any = true;
                        if (resid > tol) failed = true;
                    }
                }
                if (exhausted && !locked_any) failed = true;
                if (locked_any || invariant || exhausted) break;  // basis spans locked pairs
                // true residuals not there yet: keep extending the Krylov space
            }
            if (invariant) break;
            beta.push_back(b);
            basis.push_back(w / b);
        }

        if ((int)locked.size() >= k && locked_any && want == 1 && new_min > kth_value() + slack)
            verified = true;  // complement lies strictly above the k-th pair
    }

    SpectralResult res = make_result();
    bool ok = verified && (int)res.eigenvalues.size() == k && !failed;
    for (double r : res.residual_norms) ok = ok && r <= tol;
    if (!ok) throw NonConvergence(std::move(res));
    return res;
}

SpectralResult dense_spectrum(const SparseHermitianOperator& op, long dim_cap) {
    const long n = op.dimension();
    if (n > dim_cap)
        throw std::invalid_argument("dense_spectrum: dimension exceeds cap");
    SpectralResult res;
    res.solver = "dense";
    if (op.is_real()) {
        Eigen::MatrixXd dense = Eigen::MatrixXd(op.real_view());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
        res.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    } else {
        Eigen::MatrixXcd dense = Eigen::MatrixXcd(op.mat);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense, Eigen::EigenvaluesOnly);
        res.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    }
    res.residual_norms.assign(res.eigenvalues.size(), 0.0);
    return res;
}

namespace {

void stamp_count_metadata(CountResult& r, const SparseHermitianOperator& op) {
    r.alpha = op.alpha;
    r.lambda = op.lambda;
    r.box_half_width = op.box_half_width_x;
    r.box_n = op.box_n_x;
}

// Inertia of A - shift*I from a sparse LDL^T. Returns -1 on pivot breakdown.
long ldlt_negative_count(const SparseReal& a, double shift, double breakdown) {
    SparseReal shifted = a;
    SparseReal id(a.rows(), a.cols());
    id.setIdentity();
    shifted -= shift * id;
    Eigen::SimplicialLDLT<SparseReal> ldlt;
    ldlt.compute(shifted);
    if (ldlt.info() != Eigen::Success) return -1;
    const auto& d = ldlt.vectorD();
    long neg = 0;
    for (long i = 0; i < d.size(); ++i) {
        if (std::abs(d[i]) < breakdown) return -1;
        if (d[i] < 0) ++neg;
    }
    return neg;
}

}  // namespace

CountResult count_negative(const SparseHermitianOperator& op, double shift) {
    if (!op.is_real())
        throw std::invalid_argument("count_negative: operator must be real symmetric");
    SparseReal a = op.real_view();
    const double norm = op.inf_norm();
    const double eta = 1e-8 * std::max(norm, 1.0);
    const double breakdown = 1e-12 * std::max(norm, 1.0);

    CountResult res;
    res.method = "inertia";
    res.shift = shift;
    stamp_count_metadata(res, op);

    long c = ldlt_negative_count(a, shift, breakdown);
    if (c >= 0) {
        res.n_negative = c;
        return res;
    }
    for (double pert : {eta, -eta, 4 * eta, -4 * eta}) {
        c = ldlt_negative_count(a, shift + pert, breakdown);
        if (c >= 0) {
            res.n_negative = c;
            res.perturbation = pert;
            return res;
        }
    }
    throw std::runtime_error("count_negative: factorization singular after shift retries");
}

CountResult count_negative_dense(const SparseHermitianOperator& op, double shift) {
    SpectralResult s = dense_spectrum(op);
    CountResult res;
    res.method = "dense";
    res.shift = shift;
    stamp_count_metadata(res, op);
    res.n_negative = std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                   [&](double e) { return e < shift; });
    return res;
}

}  // namespace x2y2
