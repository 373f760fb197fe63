#include "loclab/eigs.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace loclab {

namespace {

constexpr double kDenseFallbackByteCap = 2.5e9;  // zhetrf fallback memory guard

std::string format_residual(double r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

Vec dense_eigenvalues(Mat a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return Vec(0);
    Vec w(n);
    int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                              reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
    if (info != 0) {
        // zheevd can fail on pathological input; the QR-based path is slower but robust.
        Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw SolverFailure("dense eigenvalue solve failed (zheevd info=" + std::to_string(info) + ")");
        return es.eigenvalues();
    }
    return w;
}

Inertia dense_inertia(Mat a, double zero_tol) {
    const int n = static_cast<int>(a.rows());
    Inertia inertia;
    if (n == 0) return inertia;
    std::vector<lapack_int> ipiv(n);
    int info = LAPACKE_zhetrf(LAPACK_COL_MAJOR, 'L', n,
                              reinterpret_cast<lapack_complex_double*>(a.data()), n, ipiv.data());
    if (info < 0) throw SolverFailure("zhetrf failed with info=" + std::to_string(info));
    // info > 0 flags an exactly zero pivot; the block walk below classifies it.
    const double floor = std::max(zero_tol, 0.0);
    auto classify = [&](double v) {
        if (std::abs(v) <= floor || v == 0.0)
            ++inertia.zero;
        else if (v > 0)
            ++inertia.positive;
        else
            ++inertia.negative;
    };
    int k = 0;
    while (k < n) {
        if (ipiv[k] > 0) {
            classify(a(k, k).real());
            ++k;
        } else {
            // 2x2 pivot stored at (k,k),(k+1,k),(k+1,k+1) for uplo='L'.
            const double al = a(k, k).real();
            const double de = a(k + 1, k + 1).real();
            const cxd be = a(k + 1, k);
            const double tr = al + de;
            const double det = al * de - std::norm(be);
            const double disc = std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
            classify(0.5 * tr + disc);
            classify(0.5 * tr - disc);
            k += 2;
        }
    }
    return inertia;
}

Inertia sparse_inertia(const SpMat& a, double zero_tol) {
    const int n = static_cast<int>(a.rows());
    // Unpivoted LDL^* first. Without Bunch-Kaufman pivoting an indefinite
    // factorization can mislead near breakdown, so tiny or non-real pivots
    // route to the dense path.
    Eigen::SimplicialLDLT<SpMat, Eigen::Lower, Eigen::AMDOrdering<int>> ldlt;
    ldlt.compute(a);
    if (ldlt.info() == Eigen::Success) {
        VecC d = ldlt.vectorD();
        double dmax = d.cwiseAbs().maxCoeff();
        const double trust = 1e-10 * dmax;
        bool ok = dmax > 0;
        for (int i = 0; ok && i < n; ++i) {
            if (std::abs(d(i).real()) <= std::max(trust, zero_tol)) ok = false;
            if (std::abs(d(i).imag()) > 1e-8 * dmax) ok = false;
        }
        if (ok) {
            Inertia inertia;
            for (int i = 0; i < n; ++i)
                (d(i).real() > 0 ? inertia.positive : inertia.negative)++;
            return inertia;
        }
    }
    const double bytes = 16.0 * double(n) * double(n);
    if (bytes > kDenseFallbackByteCap)
        throw SolverFailure("sparse LDL^* untrusted and dense inertia fallback would need " +
                            std::to_string(bytes / 1e9) + " GB");
    return dense_inertia(Mat(a), zero_tol);
}

namespace {

using ApplyFn = std::function<void(const VecC&, VecC&)>;

struct RitzPair {
    double value = 0.0;  // Ritz value of the operator the Lanczos ran on
    VecC vector;
    double residual = 0.0;
};

// Lanczos with full reorthogonalization on a Hermitian operator, restricted
// to the orthogonal complement of `locked`. Returns the Ritz pairs, largest
// |value| first, with residual estimates; `converged_top` reports how many
// of the leading ones meet the tolerance.
struct LanczosOutcome {
    std::vector<RitzPair> pairs;
    int converged_top = 0;
    bool exhausted = false;  // hit an invariant subspace
};

LanczosOutcome lanczos_extremal(const ApplyFn& op, int n, const std::vector<VecC>& locked,
                                int m_max, double tol, int want, std::mt19937_64& rng) {
    m_max = std::min(m_max, n - static_cast<int>(locked.size()));
    LanczosOutcome out;
    if (m_max <= 0) {
        out.exhausted = true;
        return out;
    }

    auto project_out = [&](VecC& w) {
        for (const VecC& q : locked) w -= q.dot(w) * q;
    };

    std::normal_distribution<double> g(0.0, 1.0);
    VecC v(n);
    for (int i = 0; i < n; ++i) v(i) = cxd(g(rng), g(rng));
    project_out(v);
    double nv = v.norm();
    if (nv < 1e-12) {
        out.exhausted = true;
        return out;
    }
    v /= nv;

    Mat basis(n, m_max);
    std::vector<double> alpha, beta;
    basis.col(0) = v;
    VecC w(n), prev = VecC::Zero(n);
    double op_scale = 0.0;
    int m = 0;
    bool breakdown = false;

    auto evaluate = [&](int mm, bool final_pass) -> bool {
        // Ritz values/vectors of the mm x mm tridiagonal section.
        MatR t = MatR::Zero(mm, mm);
        for (int i = 0; i < mm; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < mm) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<MatR> es(t);
        const double bm = (mm < static_cast<int>(beta.size()) + 1 && !beta.empty() && mm - 1 < (int)beta.size())
                              ? beta[mm - 1]
                              : 0.0;
        std::vector<int> order(mm);
        for (int i = 0; i < mm; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return std::abs(es.eigenvalues()(x)) > std::abs(es.eigenvalues()(y));
        });
        const double scale = std::max(std::abs(es.eigenvalues()(order[0])), 1e-300);
        out.pairs.clear();
        out.converged_top = 0;
        bool counting = true;
        const int keep = std::min(mm, std::max(want + 4, 8));
        for (int idx = 0; idx < keep; ++idx) {
            const int i = order[idx];
            RitzPair p;
            p.value = es.eigenvalues()(i);
            p.residual = std::abs(bm * es.eigenvectors()(mm - 1, i));
            const bool conv = breakdown || p.residual <= tol * std::max(std::abs(p.value), 1e-3 * scale);
            if (final_pass && conv) p.vector = basis.leftCols(mm) * es.eigenvectors().col(i).cast<cxd>();
            out.pairs.push_back(std::move(p));
            if (counting && conv)
                ++out.converged_top;
            else
                counting = false;
        }
        return out.converged_top >= want;
    };

    for (int j = 0; j < m_max; ++j) {
        op(basis.col(j), w);
        if (j > 0) w -= beta[j - 1] * prev;
        double a_j = basis.col(j).dot(w).real();
        w -= a_j * basis.col(j);
        // Two passes of full reorthogonalization keep the basis clean.
        for (int pass = 0; pass < 2; ++pass) {
            w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).adjoint() * w);
            project_out(w);
        }
        alpha.push_back(a_j);
        op_scale = std::max(op_scale, std::abs(a_j) + (j > 0 ? beta[j - 1] : 0.0));
        double b_j = w.norm();
        m = j + 1;
        if (b_j <= 1e-14 * std::max(1.0, op_scale)) {
            breakdown = true;
            break;
        }
        beta.push_back(b_j);
        if (j + 1 < m_max) {
            prev = basis.col(j);
            basis.col(j + 1) = w / b_j;
        }
        if ((j + 1) % 10 == 0 && j + 1 >= want) {
            if (evaluate(j + 1, false)) break;
        }
    }
    evaluate(m, true);
    if (breakdown && m >= n - static_cast<int>(locked.size())) out.exhausted = true;
    return out;
}

// Shift-invert operator around sigma. Retries a few perturbed shifts when
// the matrix is exactly singular at the requested one.
struct ShiftedSolve {
    Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
    double sigma = 0.0;
};

void factor_shifted(const SpMat& a, double scale, ShiftedSolve& s) {
    SpMat id(a.rows(), a.cols());
    id.setIdentity();
    for (double rel : {0.0, 1e-12, 1e-9, 1e-6}) {
        s.sigma = rel * std::max(scale, 1.0);
        SpMat shifted = a;
        if (s.sigma != 0.0) shifted = a - s.sigma * id;
        shifted.makeCompressed();
        s.lu.compute(shifted);
        if (s.lu.info() == Eigen::Success) return;
    }
    throw SolverFailure("sparse LU factorization failed at every trial shift");
}

}  // namespace

double smallest_abs_eig(const SpMat& a, const EigOptions& opts) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) throw SolverFailure("empty matrix");
    SpMat ac = a;
    ac.makeCompressed();
    ShiftedSolve solve;
    factor_shifted(ac, max_abs(ac), solve);
    ApplyFn op = [&](const VecC& x, VecC& y) { y = solve.lu.solve(x); };
    std::mt19937_64 rng(opts.seed);
    LanczosOutcome run = lanczos_extremal(op, n, {}, opts.max_lanczos, opts.tol, 1, rng);
    double best = std::numeric_limits<double>::infinity();
    int converged = 0;
    for (const RitzPair& p : run.pairs) {
        if (p.vector.size() == 0) continue;  // unconverged
        ++converged;
        double mu = solve.sigma + 1.0 / p.value;
        best = std::min(best, std::abs(mu));
    }
    if (converged == 0) {
        double res = run.pairs.empty() ? 0.0 : run.pairs.front().residual;
        throw SolverFailure("shift-invert Lanczos did not converge (residual " + format_residual(res) + ")");
    }
    return best;
}

std::vector<double> eigs_near_zero(const SpMat& a, int k, const EigOptions& opts) {
    const int n = static_cast<int>(a.rows());
    if (k < 1 || k > n) throw std::invalid_argument("eigs_near_zero: k out of range");
    SpMat ac = a;
    ac.makeCompressed();
    ShiftedSolve solve;
    factor_shifted(ac, max_abs(ac), solve);
    ApplyFn op = [&](const VecC& x, VecC& y) { y = solve.lu.solve(x); };

    // Deflation restarts. Each Lanczos run can expose one copy per distinct
    // eigenvalue, so duplicates are dug out by restarting in the orthogonal
    // complement of everything found. The window is certified complete once
    // the best candidate of a fresh restart is already farther from zero
    // than the current k-th value: the deflated operator's extremal value
    // bounds everything still unseen.
    std::vector<VecC> locked;
    std::vector<double> values;
    bool certified = false;
    for (int restart = 0; restart < opts.max_restarts; ++restart) {
        std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
        LanczosOutcome run = lanczos_extremal(op, n, locked, opts.max_lanczos, opts.tol, 4, rng);
        int took = 0;
        double best_new = std::numeric_limits<double>::infinity();
        for (const RitzPair& p : run.pairs) {
            if (p.vector.size() == 0) break;  // pairs are sorted; stop at first unconverged
            locked.push_back(p.vector);
            const double mu = solve.sigma + 1.0 / p.value;
            values.push_back(mu);
            best_new = std::min(best_new, std::abs(mu));
            ++took;
        }
        if (took == 0) {
            if (run.exhausted) {
                certified = true;  // nothing left in the complement
                break;
            }
            throw SolverFailure("shift-invert Lanczos stalled with " +
                                std::to_string(values.size()) + "/" + std::to_string(k) +
                                " eigenvalues found");
        }
        if (static_cast<int>(values.size()) >= k) {
            std::vector<double> mags;
            mags.reserve(values.size());
            for (double v : values) mags.push_back(std::abs(v));
            std::nth_element(mags.begin(), mags.begin() + (k - 1), mags.end());
            const double kth = mags[k - 1];
            if (best_new >= kth * (1.0 - 1e-9)) {
                certified = true;
                break;
            }
        }
        if (static_cast<int>(locked.size()) >= n) {
            certified = true;
            break;
        }
    }
    if (static_cast<int>(values.size()) < k || !certified)
        throw SolverFailure("deflated Lanczos found " + std::to_string(values.size()) + " of " +
                            std::to_string(k) + " eigenvalues" +
                            (certified ? "" : " without certifying the window"));
    std::sort(values.begin(), values.end(),
              [](double x, double y) { return std::abs(x) < std::abs(y); });
    values.resize(k);
    return values;
}

double largest_abs_eig(const SpMat& a, const EigOptions& opts) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) throw SolverFailure("empty matrix");
    if (max_abs(a) == 0.0) return 0.0;
    ApplyFn op = [&](const VecC& x, VecC& y) { y = a * x; };
    std::mt19937_64 rng(opts.seed);
    LanczosOutcome run = lanczos_extremal(op, n, {}, opts.max_lanczos, opts.tol, 1, rng);
    if (run.converged_top < 1) {
        double res = run.pairs.empty() ? 0.0 : run.pairs.front().residual;
        throw SolverFailure("Lanczos did not converge (residual " + format_residual(res) + ")");
    }
    return std::abs(run.pairs.front().value);
}

}  // namespace loclab
