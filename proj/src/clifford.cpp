#include "loclab/clifford.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace loclab {

Mat sigma_x() {
    Mat s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

Mat sigma_y() {
    Mat s(2, 2);
    s << 0, -kI, kI, 0;
    return s;
}

Mat sigma_z() {
    Mat s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

cxd clifford_sign(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("clifford_sign: need odd d >= 3");
    switch (((d - 1) / 2) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

CliffordRep pauli_rep() {
    CliffordRep rep;
    rep.d = 3;
    rep.r = 2;
    rep.gammas = {sigma_x(), sigma_y(), sigma_z()};
    rep.orientation = 1;
    rep.construction = "recursive-pauli";
    return rep;
}

CliffordRep build_rep(int d) {
    if (d < 1) throw std::invalid_argument("build_rep: d must be >= 1");
    if (d == 1) {
        CliffordRep rep;
        rep.d = 1;
        rep.r = 2;
        rep.gammas = {sigma_z()};
        rep.orientation = 0;
        rep.construction = "recursive-pauli";
        return rep;
    }
    if (d == 3) return pauli_rep();
    if (d % 2 == 0) {
        CliffordRep odd = build_rep(d + 1);
        CliffordRep rep;
        rep.d = d;
        rep.r = odd.r;
        rep.gammas.assign(odd.gammas.begin(), odd.gammas.begin() + d);
        rep.orientation = 0;
        rep.construction = "recursive-pauli";
        return rep;
    }
    CliffordRep base = build_rep(d - 2);
    CliffordRep rep;
    rep.d = d;
    rep.r = 2 * base.r;
    rep.gammas.reserve(d);
    const Mat id = Mat::Identity(base.r, base.r);
    for (const Mat& g : base.gammas) rep.gammas.push_back(kron(g, sigma_x()));
    rep.gammas.push_back(kron(id, sigma_y()));
    rep.gammas.push_back(kron(id, sigma_z()));
    rep.orientation = 1;
    rep.construction = "recursive-pauli";
    return rep;
}

namespace {

// gamma_d compared against eps_d * gamma_{d-1} * ... * gamma_1, signed.
double orientation_defect(const CliffordRep& rep, int orient) {
    Mat prod = Mat::Identity(rep.r, rep.r);
    for (int j = rep.d - 2; j >= 0; --j) prod = prod * rep.gammas[j];
    prod = double(orient) * clifford_sign(rep.d) * prod;
    return (rep.gammas[rep.d - 1] - prod).norm();
}

int computed_orientation(const CliffordRep& rep) {
    return orientation_defect(rep, +1) <= orientation_defect(rep, -1) ? +1 : -1;
}

}  // namespace

CliffordRep gamma5_explicit() {
    CliffordRep rep;
    rep.d = 5;
    rep.r = 4;
    rep.gammas = {kron(sigma_x(), sigma_z()), kron(sigma_y(), Mat::Identity(2, 2)),
                  kron(sigma_x(), sigma_x()), kron(sigma_x(), sigma_y()),
                  kron(sigma_z(), Mat::Identity(2, 2))};
    rep.construction = "explicit-gamma5";
    rep.orientation = computed_orientation(rep);
    return rep;
}

CliffordRep rotate_rep(const CliffordRep& rep, const MatR& u) {
    if (u.rows() != rep.d || u.cols() != rep.d)
        throw std::invalid_argument("rotate_rep: u must be d x d");
    const double defect = (u.transpose() * u - MatR::Identity(rep.d, rep.d)).norm();
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "rotate_rep: u is not orthogonal, ||u^T u - I|| = " << defect;
        throw std::invalid_argument(os.str());
    }
    CliffordRep out;
    out.d = rep.d;
    out.r = rep.r;
    out.construction = "rotated";
    out.gammas.reserve(rep.d);
    for (int j = 0; j < rep.d; ++j) {
        Mat g = Mat::Zero(rep.r, rep.r);
        for (int s = 0; s < rep.d; ++s) g += u(j, s) * rep.gammas[s];
        out.gammas.push_back(std::move(g));
    }
    if (rep.orientation != 0)
        out.orientation = u.determinant() > 0 ? rep.orientation : -rep.orientation;
    return out;
}

RepValidation validate_rep(const CliffordRep& rep, double tol) {
    if (tol <= 0) throw std::invalid_argument("validate_rep: tol must be positive");
    RepValidation v;
    v.tol = tol;
    if (rep.d <= 0 || rep.r <= 0 || static_cast<int>(rep.gammas.size()) != rep.d) {
        v.pass = false;
        v.hermiticity = v.square = v.anticommutator = std::numeric_limits<double>::infinity();
        return v;
    }
    const Mat id = Mat::Identity(rep.r, rep.r);
    for (const Mat& g : rep.gammas) {
        v.hermiticity = std::max(v.hermiticity, hermiticity_defect(g));
        v.square = std::max(v.square, (g * g - id).norm());
    }
    for (int j = 0; j < rep.d; ++j)
        for (int k = j + 1; k < rep.d; ++k)
            v.anticommutator = std::max(
                v.anticommutator, (rep.gammas[j] * rep.gammas[k] + rep.gammas[k] * rep.gammas[j]).norm());
    const bool irreducible_size = rep.r == (1 << (rep.d / 2));
    if (rep.d >= 3 && rep.d % 2 == 1 && irreducible_size && rep.orientation != 0)
        v.orientation = orientation_defect(rep, rep.orientation);
    v.pass = v.hermiticity <= tol && v.square <= tol && v.anticommutator <= tol &&
             v.orientation <= tol;
    return v;
}

}  // namespace loclab
