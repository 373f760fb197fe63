#include "loclab/common.hpp"

#include <Eigen/QR>

namespace loclab {

MatR random_orthogonal(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    MatR a(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) a(i, j) = g(rng);
    Eigen::HouseholderQR<MatR> qr(a);
    MatR q = qr.householderQ();
    MatR r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the sign ambiguity so the distribution is Haar.
    for (int j = 0; j < d; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

MatR random_special_orthogonal(int d, std::mt19937_64& rng) {
    MatR q = random_orthogonal(d, rng);
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    return q;
}

Mat random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = cxd(g(rng), g(rng));
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        cxd rjj = r(j, j);
        if (std::abs(rjj) > 0) q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

Mat random_hermitian(int n, std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> g(0.0, scale);
    Mat a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = cxd(g(rng), g(rng));
    return 0.5 * (a + Mat(a.adjoint()));
}

Vec random_unit_vector(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(d);
    do {
        for (int i = 0; i < d; ++i) v(i) = g(rng);
    } while (v.norm() < 1e-12);
    return v / v.norm();
}

}  // namespace loclab
