#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "loclab/clifford.hpp"

using namespace loclab;

namespace {
double entrywise_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }
}

TEST_CASE("pauli representation matches the printed matrices") {
    CliffordRep rep = pauli_rep();
    REQUIRE(rep.d == 3);
    REQUIRE(rep.r == 2);
    Mat sz(2, 2);
    sz << 1, 0, 0, -1;
    CHECK(entrywise_diff(rep.gammas[2], sz) == 0.0);
    // sigma_x sigma_y = -sigma_y sigma_x
    CHECK(entrywise_diff(rep.gammas[0] * rep.gammas[1], -rep.gammas[1] * rep.gammas[0]) < 1e-15);
    // gamma_3 = i gamma_2 gamma_1
    CHECK(entrywise_diff(rep.gammas[2], kI * rep.gammas[1] * rep.gammas[0]) < 1e-15);
    CHECK(rep.orientation == 1);
}

TEST_CASE("sign convention: base case and doubling recursion") {
    CHECK(clifford_sign(3) == cxd(0, 1));
    CHECK(clifford_sign(5) == cxd(-1, 0));
    CHECK(clifford_sign(7) == cxd(0, -1));
    CHECK(clifford_sign(9) == cxd(1, 0));
    CHECK(clifford_sign(11) == cxd(0, 1));
    for (int d = 3; d <= 11; d += 2) CHECK(clifford_sign(d + 2) == kI * clifford_sign(d));
}

TEST_CASE("build_rep base cases") {
    CliffordRep d1 = build_rep(1);
    CHECK(d1.r == 2);
    CHECK(entrywise_diff(d1.gammas[0], sigma_z()) == 0.0);

    CliffordRep d2 = build_rep(2);
    CHECK(d2.r == 2);
    CHECK(entrywise_diff(d2.gammas[0], sigma_x()) == 0.0);
    CHECK(entrywise_diff(d2.gammas[1], sigma_y()) == 0.0);

    CliffordRep d3 = build_rep(3);
    CHECK(d3.r == 2);

    CHECK_THROWS_AS(build_rep(0), std::invalid_argument);
}

TEST_CASE("build_rep(5) doubles the Pauli set as specified") {
    CliffordRep rep = build_rep(5);
    REQUIRE(rep.r == 4);
    Mat id = Mat::Identity(2, 2);
    CHECK(entrywise_diff(rep.gammas[3], kron(id, sigma_y())) == 0.0);
    CHECK(entrywise_diff(rep.gammas[4], kron(id, sigma_z())) == 0.0);
    for (int j = 0; j < 3; ++j)
        CHECK(entrywise_diff(rep.gammas[j], kron(pauli_rep().gammas[j], sigma_x())) == 0.0);
}

TEST_CASE("every build_rep up to d=13 satisfies the relations") {
    for (int d = 1; d <= 13; ++d) {
        CliffordRep rep = build_rep(d);
        CHECK(rep.r == (1 << (d / 2)) * (d == 1 ? 2 : 1));
        RepValidation v = validate_rep(rep, 1e-13);
        INFO("d = " << d);
        CHECK(v.pass);
    }
}

TEST_CASE("d=7 generator product identity, computed directly") {
    // gamma_7 = eps_7 gamma_6 ... gamma_1 with eps following the doubling
    // recursion from eps_3 = i, i.e. eps_7 = i^3 = -i.
    CliffordRep rep = build_rep(7);
    Mat prod = Mat::Identity(rep.r, rep.r);
    for (int j = 5; j >= 0; --j) prod = prod * rep.gammas[j];
    CHECK(entrywise_diff(rep.gammas[6], clifford_sign(7) * prod) < 1e-12);
    CHECK(clifford_sign(7) == cxd(0, -1));
}

TEST_CASE("doubling consistency: first d generators of build_rep(d+2)") {
    for (int d : {3, 5, 7}) {
        CliffordRep lo = build_rep(d);
        CliffordRep hi = build_rep(d + 2);
        for (int j = 0; j < d; ++j)
            CHECK(entrywise_diff(hi.gammas[j], kron(lo.gammas[j], sigma_x())) == 0.0);
    }
}

TEST_CASE("gamma5_explicit matches the printed matrices") {
    CliffordRep rep = gamma5_explicit();
    REQUIRE(rep.d == 5);
    REQUIRE(rep.r == 4);

    Mat g1(4, 4), g2(4, 4), g3(4, 4), g4(4, 4), g5(4, 4);
    g1 << 0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0;
    g2 << 0, 0, -kI, 0, 0, 0, 0, -kI, kI, 0, 0, 0, 0, kI, 0, 0;
    g3 << 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0;
    g4 << 0, 0, 0, -kI, 0, 0, kI, 0, 0, -kI, 0, 0, kI, 0, 0, 0;
    g5 << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1;
    CHECK(entrywise_diff(rep.gammas[0], g1) == 0.0);
    CHECK(entrywise_diff(rep.gammas[1], g2) == 0.0);
    CHECK(entrywise_diff(rep.gammas[2], g3) == 0.0);
    CHECK(entrywise_diff(rep.gammas[3], g4) == 0.0);
    CHECK(entrywise_diff(rep.gammas[4], g5) == 0.0);

    CHECK(validate_rep(rep, 1e-13).pass);
    // The set carries the +1 orientation: Gamma_5 = -Gamma_4 Gamma_3 Gamma_2 Gamma_1.
    CHECK(rep.orientation == 1);
    Mat prod = rep.gammas[3] * rep.gammas[2] * rep.gammas[1] * rep.gammas[0];
    CHECK(entrywise_diff(rep.gammas[4], clifford_sign(5) * prod) < 1e-14);
}

TEST_CASE("validate_rep reports a constructed failure") {
    std::mt19937_64 rng(5);
    CliffordRep rep = pauli_rep();
    Mat noise = random_hermitian(2, rng, 1e-6);
    rep.gammas[0] += noise;
    RepValidation v = validate_rep(rep, 1e-13);
    CHECK_FALSE(v.pass);
    double worst = std::max({v.hermiticity, v.square, v.anticommutator});
    CHECK(worst > 1e-8);
    CHECK(worst < 1e-4);
}

TEST_CASE("validate_rep passes the clean constructions") {
    CHECK(validate_rep(pauli_rep(), 1e-13).pass);
    CHECK(validate_rep(gamma5_explicit(), 1e-13).pass);
}

TEST_CASE("negating every generator flips the orientation") {
    for (int d : {3, 5}) {
        CliffordRep rep = build_rep(d);
        for (Mat& g : rep.gammas) g = -g;
        CHECK_FALSE(validate_rep(rep, 1e-13).pass);  // stored +1 no longer matches
        rep.orientation = -1;
        CHECK(validate_rep(rep, 1e-13).pass);
    }
}

TEST_CASE("rotate_rep with the identity is a no-op") {
    CliffordRep rep = pauli_rep();
    CliffordRep rot = rotate_rep(rep, MatR::Identity(3, 3));
    for (int j = 0; j < 3; ++j) CHECK(entrywise_diff(rot.gammas[j], rep.gammas[j]) == 0.0);
    CHECK(rot.orientation == 1);
}

TEST_CASE("rotate_rep by a det=+1 permutation gives an equivalent representation") {
    // Swap axes 1,2 and flip the sign of the first to keep det = +1.
    MatR u = MatR::Zero(3, 3);
    u(0, 1) = 1;
    u(1, 0) = -1;
    u(2, 2) = 1;
    REQUIRE(u.determinant() == doctest::Approx(1.0));
    CliffordRep rot = rotate_rep(pauli_rep(), u);
    CHECK(validate_rep(rot, 1e-13).pass);
    CHECK(rot.orientation == 1);
    CHECK(entrywise_diff(rot.gammas[0], sigma_y()) == 0.0);
    CHECK(entrywise_diff(rot.gammas[1], -sigma_x()) == 0.0);
}

TEST_CASE("rotate_rep rejects a non-orthogonal matrix with the defect") {
    MatR u = MatR::Identity(3, 3);
    u(0, 1) = 0.5;
    try {
        rotate_rep(pauli_rep(), u);
        FAIL("expected a rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("not orthogonal") != std::string::npos);
    }
}

TEST_CASE("random SO(5) rotations keep build_rep(5) valid") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        MatR u = random_special_orthogonal(5, rng);
        CliffordRep rot = rotate_rep(build_rep(5), u);
        CHECK(validate_rep(rot, 1e-12).pass);
        CHECK(rot.orientation == 1);
    }
}

TEST_CASE("rotation composition: rotate by u1*u2 equals two-step rotation") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        MatR u1 = random_orthogonal(5, rng);
        MatR u2 = random_orthogonal(5, rng);
        CliffordRep once = rotate_rep(build_rep(5), MatR(u1 * u2));
        CliffordRep twice = rotate_rep(rotate_rep(build_rep(5), u2), u1);
        for (int j = 0; j < 5; ++j)
            CHECK(entrywise_diff(once.gammas[j], twice.gammas[j]) < 1e-12);
    }
}
