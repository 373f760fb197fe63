#include "loclab/models.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

namespace loclab {

SpMat LatticeModel::position_operator(int axis) const {
    const int n = num_sites();
    SpMat x(n, n);
    x.reserve(Eigen::VectorXi::Constant(n, 1));
    for (int i = 0; i < n; ++i) x.insert(i, i) = position_diagonals[axis](i);
    x.makeCompressed();
    return x;
}

HermitianTuple example_abc(double t) {
    Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3), c = Mat::Zero(3, 3);
    a.diagonal() << -1, 0, 1;
    b << 0, 1, 0, 1, 0, 1, 0, 1, 0;
    c << 0, kI, 0, -kI, 0, kI, 0, -kI, 0;
    std::ostringstream label;
    label << "abc(t=" << t << ")";
    return HermitianTuple({a, t * b, t * c}, label.str());
}

HermitianTuple fuzzy_sphere(int n) {
    if (n < 2) throw std::invalid_argument("fuzzy_sphere: n must be >= 2");
    const double j = 0.5 * (n - 1);
    Mat sz = Mat::Zero(n, n), sp = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) sz(k, k) = j - k;
    // <m+1| S+ |m> = sqrt(j(j+1) - m(m+1)); row k holds m = j - k.
    for (int k = 1; k < n; ++k) {
        const double m = j - k;
        sp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    Mat sm = sp.adjoint();
    Mat sx = 0.5 * (sp + sm);
    Mat sy = -0.5 * kI * (sp - sm);
    const double scale = 1.0 / std::sqrt(j * (j + 1));
    std::ostringstream label;
    label << "fuzzy(n=" << n << ")";
    return HermitianTuple({scale * sx, scale * sy, scale * sz}, label.str());
}

namespace {

struct Key {
    long i, j;
    bool operator==(const Key& o) const { return i == o.i && j == o.j; }
};
struct KeyHash {
    std::size_t operator()(const Key& k) const {
        return std::hash<long>()(k.i * 1000003L + k.j);
    }
};

void center_at_origin(LatticeModel& model) {
    const int d = model.spatial_dim;
    Vec lo = model.site_pos[0], hi = model.site_pos[0];
    for (const Vec& p : model.site_pos) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    Vec mid = 0.5 * (lo + hi);
    for (Vec& p : model.site_pos) p -= mid;
    model.position_diagonals.assign(d, Vec::Zero(model.num_sites()));
    for (int i = 0; i < model.num_sites(); ++i)
        for (int k = 0; k < d; ++k) model.position_diagonals[k](i) = model.site_pos[i](k);
}

}  // namespace

LatticeModel haldane(const HaldaneParams& p) {
    if (p.n1 < 1 || p.n2 < 1) throw std::invalid_argument("haldane: need at least one unit cell");
    if (p.t == 0.0) throw std::invalid_argument("haldane: t must be nonzero");
    LatticeModel model;
    model.spatial_dim = 2;
    model.sublattice_names = {"a", "b"};
    model.lattice_constant = p.a;
    std::ostringstream label;
    label << "haldane(n1=" << p.n1 << ",n2=" << p.n2 << ",m=" << p.m << ",t=" << p.t
          << ",t_c=" << p.t_c << ",phi=" << p.phi << ")";
    model.label = label.str();
    model.params = {{"m", p.m},     {"t", p.t},         {"t_c", p.t_c},
                    {"phi", p.phi}, {"a", p.a},         {"n1", double(p.n1)},
                    {"n2", double(p.n2)},               {"clockwise", p.clockwise ? 1.0 : 0.0}};

    // Brick-row cut of the honeycomb: odd rows shift by half a lattice
    // vector, so every site sits on the integer grid (i * sqrt(3)a/2, j * a/2).
    const int n_sites = 2 * p.n1 * p.n2;
    model.site_pos.reserve(n_sites);
    model.site_sublattice.reserve(n_sites);
    std::unordered_map<Key, int, KeyHash> at;  // integer grid -> site index
    for (int m2 = 0; m2 < p.n2; ++m2)
        for (int m1 = 0; m1 < p.n1; ++m1) {
            const long ix = 2L * m1 + (m2 % 2);
            const long iy = 3L * m2;
            for (int s = 0; s < 2; ++s) {
                Vec pos(2);
                pos << (ix + s) * (std::sqrt(3.0) * p.a / 2.0), (iy + s) * (p.a / 2.0);
                at[{ix + s, iy + s}] = static_cast<int>(model.site_pos.size());
                model.site_pos.push_back(pos);
                model.site_sublattice.push_back(s);
            }
        }

    std::vector<Eigen::Triplet<cxd>> trips;
    auto key_of = [&](int site) -> Key {
        const Vec& pos = model.site_pos[site];
        return {std::lround(pos(0) / (std::sqrt(3.0) * p.a / 2.0)),
                std::lround(pos(1) / (p.a / 2.0))};
    };
    auto add_bond = [&](int to, int from, cxd amp) {
        trips.emplace_back(to, from, amp);
        trips.emplace_back(from, to, std::conj(amp));
    };

    // Nearest neighbors, enumerated from the a-sublattice end of each bond.
    const Key nn_steps[3] = {{1, 1}, {-1, 1}, {0, -2}};
    // Next-nearest half-set: +a1, +a2, a2-a1 in integer grid units, with the
    // counterclockwise sign of the phase for the a sublattice.
    struct NnnStep {
        Key step;
        int nu_a;
    };
    const NnnStep nnn_steps[3] = {{{2, 0}, -1}, {{1, 3}, +1}, {{-1, 3}, -1}};

    for (int site = 0; site < n_sites; ++site) {
        const int sub = model.site_sublattice[site];
        const Key k = key_of(site);
        trips.emplace_back(site, site, cxd(sub == 0 ? p.m : -p.m, 0.0));
        if (sub == 0)
            for (const Key& st : nn_steps)
                if (auto it = at.find({k.i + st.i, k.j + st.j}); it != at.end())
                    add_bond(it->second, site, cxd(-p.t, 0.0));
        if (p.t_c != 0.0)
            for (const NnnStep& st : nnn_steps)
                if (auto it = at.find({k.i + st.step.i, k.j + st.step.j}); it != at.end()) {
                    int nu = (sub == 0 ? st.nu_a : -st.nu_a) * (p.clockwise ? -1 : 1);
                    add_bond(it->second, site, -p.t_c * std::exp(kI * (p.phi * nu)));
                }
    }
    model.hamiltonian = SpMat(n_sites, n_sites);
    model.hamiltonian.setFromTriplets(trips.begin(), trips.end());
    model.hamiltonian.prune([](int, int, const cxd& v) { return v != cxd(0, 0); });
    center_at_origin(model);
    return model;
}

LatticeModel lattice4d(const Lattice4dParams& p) {
    if (p.n < 1) throw std::invalid_argument("lattice4d: need at least one unit cell");
    LatticeModel model;
    model.spatial_dim = 4;
    model.sublattice_names = {"a", "b", "c", "d"};
    model.lattice_constant = p.a;
    std::ostringstream label;
    label << "lattice4d(n=" << p.n << ",m=" << p.m << ",t=" << p.t << ",t1=" << p.t1.real();
    if (p.t1.imag() != 0) label << (p.t1.imag() > 0 ? "+" : "") << p.t1.imag() << "i";
    label << ")";
    model.label = label.str();
    model.params = {{"m", p.m},           {"t", p.t},           {"t1_re", p.t1.real()},
                    {"t1_im", p.t1.imag()}, {"a", p.a},         {"n", double(p.n)}};

    const int n = p.n;
    const int n_cells = n * n * n * n;
    const int n_sites = 4 * n_cells;
    auto cell_index = [n](int m, int nn, int j, int l) { return ((m * n + nn) * n + j) * n + l; };
    auto site_index = [&](int cell, int s) { return 4 * cell + s; };

    model.site_pos.reserve(n_sites);
    model.site_sublattice.reserve(n_sites);
    for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    for (int s = 0; s < 4; ++s) {
                        Vec pos(4);
                        pos << m * p.a, nn * p.a, j * p.a, l * p.a;
                        model.site_pos.push_back(pos);
                        model.site_sublattice.push_back(s);
                    }

    enum Sub { A = 0, B = 1, C = 2, D = 3 };
    struct Term {
        int to, from;
        cxd amp;
        int dm, dn, dj, dl;
    };
    const cxd mt(-p.t, 0.0), pt(p.t, 0.0);
    std::vector<Term> terms = {
        // intra-cell nearest neighbors
        {C, A, mt, 0, 0, 0, 0},
        {B, D, pt, 0, 0, 0, 0},
        {D, A, mt, 0, 0, 0, 0},
        {B, C, mt, 0, 0, 0, 0},
        // inter-cell nearest neighbors
        {A, C, mt, 1, 1, 0, 0},
        {D, B, pt, 1, 1, 0, 0},
        {C, A, mt, -1, 0, 0, 0},
        {B, D, pt, -1, 0, 0, 0},
        {A, D, mt, 0, 0, 1, 1},
        {C, B, mt, 0, 0, 1, 1},
        {D, A, mt, 0, 0, -1, 0},
        {B, C, mt, 0, 0, -1, 0},
        // longer-range couplings
        {A, A, -p.t1, 1, 1, 1, 1},
        {B, B, -p.t1, 1, 1, 1, 1},
        {C, C, p.t1, 1, 1, 1, 1},
        {D, D, p.t1, 1, 1, 1, 1},
    };

    std::vector<Eigen::Triplet<cxd>> trips;
    for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    const int cell = cell_index(m, nn, j, l);
                    trips.emplace_back(site_index(cell, A), site_index(cell, A), cxd(p.m, 0));
                    trips.emplace_back(site_index(cell, B), site_index(cell, B), cxd(p.m, 0));
                    trips.emplace_back(site_index(cell, C), site_index(cell, C), cxd(-p.m, 0));
                    trips.emplace_back(site_index(cell, D), site_index(cell, D), cxd(-p.m, 0));
                    for (const Term& t : terms) {
                        const int tm = m + t.dm, tn = nn + t.dn, tj = j + t.dj, tl = l + t.dl;
                        if (tm < 0 || tm >= n || tn < 0 || tn >= n || tj < 0 || tj >= n ||
                            tl < 0 || tl >= n)
                            continue;  // open boundary
                        const int to = site_index(cell_index(tm, tn, tj, tl), t.to);
                        const int from = site_index(cell, t.from);
                        trips.emplace_back(to, from, t.amp);
                        trips.emplace_back(from, to, std::conj(t.amp));
                    }
                }
    model.hamiltonian = SpMat(n_sites, n_sites);
    model.hamiltonian.setFromTriplets(trips.begin(), trips.end());
    model.hamiltonian.prune([](int, int, const cxd& v) { return v != cxd(0, 0); });
    center_at_origin(model);
    return model;
}

std::pair<ScaledTuple, ProbePoint> scale_2d(const LatticeModel& model, double kappa_x,
                                            double kappa_h, const Vec& probe_xye) {
    if (model.spatial_dim != 2) throw std::invalid_argument("scale_2d: model is not 2-dimensional");
    if (probe_xye.size() != 3) throw std::invalid_argument("scale_2d: probe must be (x, y, E)");
    ScaledTuple st;
    st.kappas = {kappa_x, kappa_x, kappa_h};
    std::vector<SpMat> mats = {SpMat(kappa_x * model.position_operator(0)),
                               SpMat(kappa_x * model.position_operator(1)),
                               SpMat(kappa_h * model.hamiltonian)};
    st.tuple = HermitianTuple(std::move(mats), model.label + " scaled");
    Vec lambda(3);
    lambda << kappa_x * probe_xye(0), kappa_x * probe_xye(1), kappa_h * probe_xye(2);
    return {std::move(st), ProbePoint(lambda)};
}

std::pair<ScaledTuple, ProbePoint> scale_4d(const LatticeModel& model, double kappa,
                                            const Vec& probe_xxxxe) {
    if (model.spatial_dim != 4) throw std::invalid_argument("scale_4d: model is not 4-dimensional");
    if (probe_xxxxe.size() != 5)
        throw std::invalid_argument("scale_4d: probe must be (x1, x2, x3, x4, E)");
    ScaledTuple st;
    st.kappas = {kappa, kappa, kappa, kappa, 1.0};
    std::vector<SpMat> mats;
    for (int k = 0; k < 4; ++k) mats.push_back(SpMat(kappa * model.position_operator(k)));
    mats.push_back(model.hamiltonian);
    st.tuple = HermitianTuple(std::move(mats), model.label + " scaled");
    Vec lambda(5);
    for (int k = 0; k < 4; ++k) lambda(k) = kappa * probe_xxxxe(k);
    lambda(4) = probe_xxxxe(4);
    return {std::move(st), ProbePoint(lambda)};
}

}  // namespace loclab
