#include "loclab/localizer.hpp"

#include <algorithm>
#include <cmath>

namespace loclab {

namespace {

void check_hermitian(const SpMat& a, const std::string& label, int j) {
    const double defect = hermiticity_defect(a);
    const double scale = std::max(1.0, max_abs(a));
    if (defect > 1e-12 * scale)
        throw std::invalid_argument("HermitianTuple '" + label + "': matrix " + std::to_string(j) +
                                    " is not Hermitian (defect " + std::to_string(defect) + ")");
}

}  // namespace

HermitianTuple::HermitianTuple(std::vector<SpMat> matrices, std::string lbl)
    : d(static_cast<int>(matrices.size())), mats(std::move(matrices)), label(std::move(lbl)) {
    if (d == 0) throw std::invalid_argument("HermitianTuple: empty tuple");
    n = static_cast<int>(mats[0].rows());
    for (int j = 0; j < d; ++j) {
        if (mats[j].rows() != n || mats[j].cols() != n)
            throw std::invalid_argument("HermitianTuple '" + label + "': matrices must be square and same size");
        check_hermitian(mats[j], label, j);
    }
}

HermitianTuple::HermitianTuple(const std::vector<Mat>& matrices, std::string lbl) {
    std::vector<SpMat> sp;
    sp.reserve(matrices.size());
    for (const Mat& m : matrices) sp.push_back(m.sparseView());
    *this = HermitianTuple(std::move(sp), std::move(lbl));
}

double tuple_norm_sum(const HermitianTuple& tuple, const EigOptions& opts) {
    double s = 0.0;
    for (const SpMat& a : tuple.mats) {
        if (tuple.n <= 512)
            s += dense_eigenvalues(Mat(a)).cwiseAbs().maxCoeff();
        else
            s += largest_abs_eig(a, opts);
    }
    return s;
}

double default_singular_tol(double norm_sum, const ProbePoint& lambda) {
    return 1e-8 * (1.0 + lambda.coords.norm() + norm_sum);
}

SpMat assemble(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep) {
    if (rep.d != tuple.d)
        throw std::invalid_argument("assemble: tuple has d=" + std::to_string(tuple.d) +
                                    " but representation has d=" + std::to_string(rep.d));
    if (lambda.d() != tuple.d)
        throw std::invalid_argument("assemble: probe point has wrong dimension");
    const int n = tuple.n, r = rep.r;
    std::vector<Eigen::Triplet<cxd>> trips;
    std::size_t nnz_estimate = 0;
    for (const SpMat& a : tuple.mats) nnz_estimate += a.nonZeros() + n;
    trips.reserve(nnz_estimate * 2);
    for (int j = 0; j < tuple.d; ++j) {
        const Mat& g = rep.gammas[j];
        std::vector<std::pair<std::pair<int, int>, cxd>> gnz;
        for (int t = 0; t < r; ++t)
            for (int s = 0; s < r; ++s)
                if (g(s, t) != cxd(0, 0)) gnz.push_back({{s, t}, g(s, t)});
        const SpMat& a = tuple.mats[j];
        for (int col = 0; col < a.outerSize(); ++col)
            for (SpMat::InnerIterator it(a, col); it; ++it)
                for (const auto& [st, gv] : gnz)
                    trips.emplace_back(it.row() * r + st.first, it.col() * r + st.second,
                                       it.value() * gv);
        const double lj = lambda.coords(j);
        if (lj != 0.0)
            for (int p = 0; p < n; ++p)
                for (const auto& [st, gv] : gnz)
                    trips.emplace_back(p * r + st.first, p * r + st.second, -lj * gv);
    }
    SpMat loc(static_cast<long>(n) * r, static_cast<long>(n) * r);
    loc.setFromTriplets(trips.begin(), trips.end());
    loc.prune([](int, int, const cxd& v) { return v != cxd(0, 0); });
#ifndef NDEBUG
    if (hermiticity_defect(loc) > 1e-12 * std::max(1.0, max_abs(loc)))
        throw std::logic_error("assemble: localizer lost Hermiticity");
#endif
    return loc;
}

namespace {

double effective_singular_tol(const HermitianTuple& tuple, const ProbePoint& lambda,
                              const LocalizerOptions& opts) {
    if (opts.singular_tol >= 0) return opts.singular_tol;
    return default_singular_tol(tuple_norm_sum(tuple, opts.eig), lambda);
}

double gap_from_spectrum(const Vec& w) { return w.cwiseAbs().minCoeff(); }

int signature_from_spectrum(const Vec& w, double zero_tol) {
    int sig = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (std::abs(w(i)) <= zero_tol) continue;
        sig += w(i) > 0 ? 1 : -1;
    }
    return sig;
}

// k eigenvalues nearest zero out of `all`, ties in |value| resolved
// negative-first, returned ascending by value.
std::vector<double> select_window(std::vector<double> all, int k) {
    std::sort(all.begin(), all.end(), [](double x, double y) {
        if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
        return x < y;
    });
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

double gap(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep,
           const LocalizerOptions& opts) {
    SpMat loc = assemble(tuple, lambda, rep);
    if (loc.rows() <= opts.dense_threshold) return gap_from_spectrum(dense_eigenvalues(Mat(loc)));
    return smallest_abs_eig(loc, opts.eig);
}

int signature(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep,
              const LocalizerOptions& opts) {
    const double tol = effective_singular_tol(tuple, lambda, opts);
    SpMat loc = assemble(tuple, lambda, rep);
    if (loc.rows() <= opts.dense_threshold) {
        Vec w = dense_eigenvalues(Mat(loc));
        if (gap_from_spectrum(w) <= tol)
            throw SingularLocalizer("localizer singular at this probe point (gap " +
                                    std::to_string(gap_from_spectrum(w)) + " <= tol " +
                                    std::to_string(tol) + ")");
        return signature_from_spectrum(w, tol);
    }
    const double g = smallest_abs_eig(loc, opts.eig);
    if (g <= tol)
        throw SingularLocalizer("localizer singular at this probe point (gap " + std::to_string(g) +
                                " <= tol " + std::to_string(tol) + ")");
    Inertia in = sparse_inertia(loc, 0.0);
    if (in.zero > 0) throw SingularLocalizer("inertia reports zero pivots at this probe point");
    return in.signature();
}

int index(const HermitianTuple& tuple, const ProbePoint& lambda, const CliffordRep& rep,
          const LocalizerOptions& opts) {
    const int sig = signature(tuple, lambda, rep, opts);
    if (sig % 2 != 0)
        throw OddSignature("signature " + std::to_string(sig) +
                           " is odd; check the representation orientation");
    return sig / 2;
}

std::vector<double> eig_window(const HermitianTuple& tuple, const ProbePoint& lambda,
                               const CliffordRep& rep, int k, const LocalizerOptions& opts) {
    SpMat loc = assemble(tuple, lambda, rep);
    if (k < 1 || k > loc.rows()) throw std::invalid_argument("eig_window: k out of range");
    if (loc.rows() <= opts.dense_threshold) {
        Vec w = dense_eigenvalues(Mat(loc));
        return select_window(std::vector<double>(w.data(), w.data() + w.size()), k);
    }
    return select_window(eigs_near_zero(loc, k, opts.eig), k);
}

LocalizerReport probe_report(const HermitianTuple& tuple, const ProbePoint& lambda,
                             const CliffordRep& rep, int k, const LocalizerOptions& opts) {
    const double tol = effective_singular_tol(tuple, lambda, opts);
    SpMat loc = assemble(tuple, lambda, rep);
    k = std::min<long>(k, loc.rows());
    LocalizerReport rep_out;
    if (loc.rows() <= opts.dense_threshold) {
        Vec w = dense_eigenvalues(Mat(loc));
        rep_out.gap = gap_from_spectrum(w);
        rep_out.eig_window = select_window(std::vector<double>(w.data(), w.data() + w.size()), k);
        rep_out.singular_flag = rep_out.gap <= tol;
        if (!rep_out.singular_flag) {
            rep_out.signature = signature_from_spectrum(w, tol);
            if (*rep_out.signature % 2 == 0) rep_out.index = *rep_out.signature / 2;
        }
    } else {
        rep_out.gap = smallest_abs_eig(loc, opts.eig);
        rep_out.singular_flag = rep_out.gap <= tol;
        rep_out.eig_window = select_window(eigs_near_zero(loc, k, opts.eig), k);
        if (!rep_out.singular_flag) {
            Inertia in = sparse_inertia(loc, 0.0);
            if (in.zero == 0) {
                rep_out.signature = in.signature();
                if (*rep_out.signature % 2 == 0) rep_out.index = *rep_out.signature / 2;
            } else {
                rep_out.singular_flag = true;
            }
        }
    }
    return rep_out;
}

namespace {

double hermitian_spectral_norm(const SpMat& a, const EigOptions& opts) {
    if (a.rows() <= 2048) {
        Mat d(a);
        if (d.size() == 0) return 0.0;
        return dense_eigenvalues(d).cwiseAbs().maxCoeff();
    }
    return largest_abs_eig(a, opts);
}

}  // namespace

ObstructionNorms obstruction_norms(const HermitianTuple& tuple, const EigOptions& opts) {
    ObstructionNorms out;
    const int d = tuple.d;
    out.commutator = MatR::Zero(d, d);
    out.matrix_norm = Vec::Zero(d);
    for (int j = 0; j < d; ++j) out.matrix_norm(j) = hermitian_spectral_norm(tuple.mats[j], opts);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            SpMat c = tuple.mats[j] * tuple.mats[k] - tuple.mats[k] * tuple.mats[j];
            SpMat herm = kI * c;  // i[A,B] is Hermitian
            out.commutator(j, k) = out.commutator(k, j) = hermitian_spectral_norm(herm, opts);
        }
    SpMat sq(tuple.n, tuple.n);
    for (const SpMat& a : tuple.mats) sq = sq + SpMat(a * a);
    SpMat id(tuple.n, tuple.n);
    id.setIdentity();
    sq = sq - id;
    out.sphere_defect = hermitian_spectral_norm(sq, opts);
    return out;
}

}  // namespace loclab
