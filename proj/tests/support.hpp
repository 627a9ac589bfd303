#pragma once

// Independent oracles for the unit tests. None of these go through the complex
// adjoint: a quaternionic matrix is expanded into the real 4n x 4n matrix of
// left multiplications acting on R^4n, which shares norms, products and the
// (u +- iv) eigenvalue pairs with the quaternionic operator.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qspectral/qmatrix.hpp"
#include "qspectral/quaternion.hpp"

namespace qtest {

using qspectral::QMatrix;
using qspectral::Quaternion;

// Matrix of x -> q x on (x0, x1, x2, x3), written out from the multiplication table.
inline Eigen::Matrix4d left_mult(const Quaternion& q) {
    Eigen::Matrix4d m;
    m << q.x0, -q.x1, -q.x2, -q.x3,
         q.x1,  q.x0, -q.x3,  q.x2,
         q.x2,  q.x3,  q.x0, -q.x1,
         q.x3, -q.x2,  q.x1,  q.x0;
    return m;
}

inline Eigen::MatrixXd real_form(const QMatrix& t) {
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd r(4 * n, 4 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            r.block<4, 4>(4 * i, 4 * j) = left_mult(t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    return r;
}

inline double oracle_norm(const QMatrix& t) {
    if (t.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_form(t));
    return svd.singularValues()(0);
}

inline double oracle_smallest_sv(const QMatrix& t) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_form(t));
    return svd.singularValues()(svd.singularValues().size() - 1);
}

// Singular values of the real form come in groups of four per quaternionic singular value.
inline std::vector<double> oracle_singular_values(const QMatrix& t) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_form(t));
    std::vector<double> out;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k += 4) out.push_back(svd.singularValues()(k));
    return out;
}

// Eigenvalues of the real form with v >= 0, sorted; each sphere appears 2x its multiplicity.
inline std::vector<std::complex<double>> oracle_eigenvalues(const QMatrix& t) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(real_form(t), false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const auto z = es.eigenvalues()(k);
        if (z.imag() >= 0.0) out.emplace_back(z.real(), z.imag());
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    return out;
}

inline double max_entry_diff(const QMatrix& a, const QMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, (a(i, j) - b(i, j)).norm());
    return worst;
}

inline double qdiff(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

// Naive power T^k by repeated multiplication.
inline QMatrix power(const QMatrix& t, int k) {
    QMatrix out = QMatrix::identity(t.size());
    for (int i = 0; i < k; ++i) out = out * t;
    return out;
}

}  // namespace qtest
