#pragma once

#include <cstdint>
#include <vector>

#include "loclab/common.hpp"

namespace loclab {

/// Eigenvalue counts of a Hermitian matrix split by sign.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    int signature() const { return positive - negative; }
};

struct EigOptions {
    int max_lanczos = 300;      // Krylov dimension per restart
    int max_restarts = 40;      // deflation restarts when hunting multiplicities
    double tol = 1e-11;         // relative Ritz residual threshold
    std::uint64_t seed = 0x10c417ab;
};

/// All eigenvalues of a dense Hermitian matrix, ascending (LAPACK zheevd).
Vec dense_eigenvalues(Mat a);

/// Inertia of a dense Hermitian matrix via Bunch-Kaufman factorization
/// (LAPACK zhetrf). Pivots with |value| <= zero_tol count as zero.
Inertia dense_inertia(Mat a, double zero_tol = 0.0);

/// Inertia of a sparse Hermitian matrix. Tries an unpivoted sparse LDL^*
/// first; falls back to the dense Bunch-Kaufman route when pivots look
/// untrustworthy (the fallback needs 16*n^2 bytes, guarded).
Inertia sparse_inertia(const SpMat& a, double zero_tol = 0.0);

/// Smallest |eigenvalue| of a sparse Hermitian matrix (shift-invert Lanczos
/// around 0; retries with a perturbed shift when the factorization hits an
/// exactly singular matrix).
double smallest_abs_eig(const SpMat& a, const EigOptions& opts = {});

/// The k eigenvalues of a sparse Hermitian matrix nearest 0, with
/// multiplicities, unordered. Shift-invert Lanczos with deflation restarts.
std::vector<double> eigs_near_zero(const SpMat& a, int k, const EigOptions& opts = {});

/// Largest |eigenvalue| of a sparse Hermitian matrix, i.e. its spectral
/// norm. Plain Lanczos, no factorization.
double largest_abs_eig(const SpMat& a, const EigOptions& opts = {});

}  // namespace loclab
