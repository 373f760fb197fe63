#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace loclab {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using MatR = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using VecC = Eigen::VectorXcd;
using SpMat = Eigen::SparseMatrix<cxd>;

inline constexpr cxd kI{0.0, 1.0};

/// Thrown when an iterative solver fails to converge or a factorization
/// breaks down beyond recovery. Carries the residual/diagnostic in what().
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Probe point lies on (or numerically near) the Clifford spectrum, so the
/// localizer has no well-defined signature there.
struct SingularLocalizer : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Signature came out odd where an index was requested. This signals a
/// representation/orientation problem and is never silently rounded.
struct OddSignature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

inline double hermiticity_defect(const Mat& a) { return max_abs(a - a.adjoint()); }

inline double hermiticity_defect(const SpMat& a) {
    SpMat d = SpMat(a.adjoint()) - a;
    double m = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SpMat::InnerIterator it(d, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

inline double max_abs(const SpMat& a) {
    double m = 0.0;
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

/// Haar-ish random orthogonal matrix from QR of a Gaussian sample.
MatR random_orthogonal(int d, std::mt19937_64& rng);

/// Random special orthogonal matrix (det = +1).
MatR random_special_orthogonal(int d, std::mt19937_64& rng);

/// Haar-ish random unitary matrix from QR of a complex Gaussian sample.
Mat random_unitary(int n, std::mt19937_64& rng);

/// Random dense Hermitian matrix with entries of magnitude O(scale).
Mat random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0);

/// Uniform point on the unit sphere in R^d.
Vec random_unit_vector(int d, std::mt19937_64& rng);

}  // namespace loclab
