#pragma once

#include <map>
#include <string>
#include <vector>

#include "loclab/localizer.hpp"

namespace loclab {

/// A finite tight-binding sample: site geometry, Hamiltonian (units of
/// energy), and diagonal position operators (units of distance).
struct LatticeModel {
    int spatial_dim = 0;                     // D: 2 (honeycomb) or 4
    std::vector<Vec> site_pos;               // per-site coordinates, length D each
    std::vector<int> site_sublattice;        // index into sublattice_names
    std::vector<std::string> sublattice_names;
    SpMat hamiltonian;                       // n x n Hermitian
    std::vector<Vec> position_diagonals;     // D vectors of length n
    std::map<std::string, double> params;
    double lattice_constant = 1.0;
    std::string label;

    int num_sites() const { return static_cast<int>(site_pos.size()); }
    SpMat position_operator(int axis) const;
};

/// A tuple produced by applying scaling coefficients to a lattice model,
/// with the coefficients kept for reconstruction.
struct ScaledTuple {
    HermitianTuple tuple;
    std::vector<double> kappas;  // per-member scaling applied
};

/// The 3x3 scaling example: (A, tB, tC) with A = diag(-1,0,1), B the
/// tridiagonal of ones, C the tridiagonal of +-i.
HermitianTuple example_abc(double t);

/// Fuzzy sphere generators X_k = S_k / sqrt(j(j+1)) at spin j = (n-1)/2;
/// sum X_k^2 = I exactly.
HermitianTuple fuzzy_sphere(int n);

struct HaldaneParams {
    int n1 = 1, n2 = 1;      // unit cells along the two lattice directions
    double m = 0.0;          // sublattice on-site energy +-m
    double t = 1.0;          // nearest-neighbor coupling
    double t_c = 0.0;        // next-nearest-neighbor coupling
    double phi = 0.0;        // chiral phase on NNN hops
    double a = 1.0;          // site spacing (lattice vectors have length sqrt(3) a)
    bool clockwise = false;  // flips which hop direction carries +phi
};

/// Finite honeycomb sample with open boundary, rectangular (brick-row) cut,
/// centered at the origin. +phi attaches to counterclockwise NNN hops around
/// each hexagon unless `clockwise` is set.
LatticeModel haldane(const HaldaneParams& p);

struct Lattice4dParams {
    int n = 1;          // unit cells per axis
    double m = 0.0;     // on-site +-m pattern (+ on a,b; - on c,d)
    double t = 1.0;     // nearest-neighbor coupling
    cxd t1 = {0.0, 0.0};  // longer-range coupling; real => class AI, complex => class A
    double a = 1.0;     // lattice constant
};

/// The 4D four-site-per-cell lattice with on-site, intra-cell, inter-cell
/// and long-range terms, open boundary, centered at the origin. All four
/// sites of a cell share the cell coordinate.
LatticeModel lattice4d(const Lattice4dParams& p);

/// (kappa_x X, kappa_x Y, kappa_h H) probed at lambda = (kappa_x x, kappa_x y, kappa_h E).
std::pair<ScaledTuple, ProbePoint> scale_2d(const LatticeModel& model, double kappa_x,
                                            double kappa_h, const Vec& probe_xye);

/// (kappa X_1..X_4, H) probed at lambda = (kappa x_1..x_4, E); kappa scales
/// positions only, the Hamiltonian enters unscaled.
std::pair<ScaledTuple, ProbePoint> scale_4d(const LatticeModel& model, double kappa,
                                            const Vec& probe_xxxxe);

}  // namespace loclab
