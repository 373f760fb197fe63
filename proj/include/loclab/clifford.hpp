#pragma once

#include <string>
#include <vector>

#include "loclab/common.hpp"

namespace loclab {

/// A representation of the complex Clifford relations: d Hermitian matrices
/// with gamma_j^2 = I and pairwise anticommutation. For odd d >= 3 and
/// irreducible size, `orientation` records which of the two inequivalent
/// irreducibles this is: +1 when gamma_d = eps_d * gamma_{d-1} ... gamma_1
/// with eps_d = i^{(d-1)/2}, -1 for the negated one. Zero means
/// not applicable (even d, d = 1, or reducible).
struct CliffordRep {
    int d = 0;
    int r = 0;
    std::vector<Mat> gammas;
    int orientation = 0;
    std::string construction;  // recursive-pauli | explicit-gamma5 | rotated | user-supplied
};

struct RepValidation {
    double hermiticity = 0.0;     // max_j ||g_j - g_j^*||_max
    double square = 0.0;          // max_j ||g_j^2 - I||_F
    double anticommutator = 0.0;  // max_{j<k} ||g_j g_k + g_k g_j||_F
    double orientation = 0.0;     // odd d, irreducible: ||g_d - orient*eps_d*g_{d-1}...g_1||_F
    double tol = 0.0;
    bool pass = false;
};

/// Sign convention factor for odd d >= 3: gamma_d = eps_d gamma_{d-1}...gamma_1.
/// eps_3 = i (sigma_z = i sigma_y sigma_x) and eps_{d+2} = i eps_d, so
/// eps_d = i^{(d-1)/2}.
cxd clifford_sign(int d);

/// The Pauli triple (sigma_x, sigma_y, sigma_z), orientation +1.
CliffordRep pauli_rep();

/// Irreducible representation of size 2^{floor(d/2)} by recursive doubling:
/// from an odd-d rep, alpha_j = gamma_j (x) sigma_x, alpha_{d+1} = I (x) sigma_y,
/// alpha_{d+2} = I (x) sigma_z. Even d takes the first d generators of the
/// next odd rep. d = 1 returns sigma_z (the 2x2 involution with spectrum
/// {-1,1}; irreducibility is waived there).
CliffordRep build_rep(int d);

/// The explicit d=5 set Gamma_1..Gamma_5 (sigma_x(x)sigma_z, sigma_y(x)I,
/// sigma_x(x)sigma_x, sigma_x(x)sigma_y, sigma_z(x)I). Orientation is
/// computed from the generator product, not assumed.
CliffordRep gamma5_explicit();

/// New representation gamma_hat_j = sum_r u_{jr} gamma_r for real orthogonal u.
/// Rejects non-orthogonal u (the message carries ||u^T u - I||).
/// For odd-d irreducible input the orientation flips with det(u).
CliffordRep rotate_rep(const CliffordRep& rep, const MatR& u);

/// Measures all relation defects; passes iff every defect <= tol. The
/// orientation product is only checked for odd d >= 3 at irreducible size
/// with a declared orientation. Reports, never throws.
RepValidation validate_rep(const CliffordRep& rep, double tol);

// Pauli matrices.
Mat sigma_x();
Mat sigma_y();
Mat sigma_z();

/// Dense Kronecker product, left factor major.
Mat kron(const Mat& a, const Mat& b);

}  // namespace loclab
