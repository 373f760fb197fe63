#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loclab/clifford.hpp"
#include "loclab/common.hpp"
#include "loclab/eigs.hpp"

namespace loclab {

/// An ordered list of d same-size Hermitian matrices. Construction rejects
/// non-Hermitian input outright; nothing is ever symmetrized silently.
struct HermitianTuple {
    int d = 0;
    int n = 0;
    std::vector<SpMat> mats;
    std::string label;

    HermitianTuple() = default;
    HermitianTuple(std::vector<SpMat> matrices, std::string lbl = {});
    HermitianTuple(const std::vector<Mat>& matrices, std::string lbl = {});

    Mat dense(int j) const { return Mat(mats[j]); }
};

struct ProbePoint {
    Vec coords;
    ProbePoint() = default;
    explicit ProbePoint(Vec c) : coords(std::move(c)) {}
    ProbePoint(std::initializer_list<double> c) : coords(Eigen::Map<const Vec>(c.begin(), c.size())) {}
    int d() const { return static_cast<int>(coords.size()); }
};

struct LocalizerOptions {
    int dense_threshold = 2048;  // total localizer dimension at/below which the dense path runs
    double singular_tol = -1.0;  // < 0 means the scale-relative default
    EigOptions eig;
};

/// gap, signature, index and near-zero window at one probe point.
/// signature/index are absent when the localizer is singular at tolerance;
/// index additionally requires an even signature.
struct LocalizerReport {
    double gap = 0.0;
    std::optional<int> signature;
    std::optional<int> index;
    std::vector<double> eig_window;
    bool singular_flag = false;
};

struct ObstructionNorms {
    MatR commutator;    // d x d, entry (j,k) = ||[A_j, A_k]||_2
    Vec matrix_norm;    // ||A_j||_2
    double sphere_defect = 0.0;  // ||sum A_j^2 - I||_2
};

/// Sum of spectral norms of the tuple members; one ingredient of the default
/// singular tolerance. Callers scanning many probe points should compute it
/// once and reuse.
double tuple_norm_sum(const HermitianTuple& tuple, const EigOptions& opts = {});

/// Scale-relative threshold below which the localizer counts as singular:
/// 1e-8 * (1 + ||lambda|| + sum_j ||A_j||_2).
double default_singular_tol(double norm_sum, const ProbePoint& lambda);

/// The spectral localizer sum_j (A_j - lambda_j I) (x) gamma_j, Hermitian of
/// size n*r. Kronecker order is matrix-major, Clifford-minor.
SpMat assemble(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep);

/// Smallest |eigenvalue| of the localizer (the Clifford pseudospectrum
/// mu^C_lambda). Dense eigendecomposition at small size, shift-invert
/// Lanczos above the threshold.
double gap(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep,
           const LocalizerOptions& opts = {});

/// Positive minus negative eigenvalue count of the localizer. Throws
/// SingularLocalizer when the gap is at or below the singular tolerance.
int signature(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep,
              const LocalizerOptions& opts = {});

/// signature/2. Throws OddSignature when the signature is odd.
int index(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep,
          const LocalizerOptions& opts = {});

/// The k localizer eigenvalues nearest zero, sorted ascending by value.
/// When |values| tie across signs the negative one is selected first.
std::vector<double> eig_window(const HermitianTuple& tuple, const ProbePoint& lambda,
                               const CliffordRep& rep, int k, const LocalizerOptions& opts = {});

/// Everything at once, sharing one eigendecomposition on the dense path.
LocalizerReport probe_report(const HermitianTuple& tuple, const ProbePoint& lambda,
                             const CliffordRep& rep, int k, const LocalizerOptions& opts = {});

/// Commutator norms ||[A_j,A_k]||_2, matrix norms, and ||sum A_j^2 - I||_2.
ObstructionNorms obstruction_norms(const HermitianTuple& tuple, const EigOptions& opts = {});

}  // namespace loclab
