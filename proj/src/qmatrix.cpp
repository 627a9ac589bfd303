#include "qspectral/qmatrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "qspectral/error.hpp"

namespace qspectral {

Quaternion inner(std::span<const Quaternion> x, std::span<const Quaternion> y) {
    assert(x.size() == y.size());
    Quaternion acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i].conj() * y[i];
    return acc;
}

double norm(std::span<const Quaternion> x) {
    double acc = 0.0;
    for (const auto& q : x) acc += q.norm2();
    return std::sqrt(acc);
}

QVector operator*(QVector x, const Quaternion& s) {
    for (auto& q : x) q = q * s;
    return x;
}

QVector operator+(QVector x, const QVector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

QVector operator-(QVector x, const QVector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorKind::BadArgument, "matrix must be square");
        std::size_t j = 0;
        for (const auto& q : row) (*this)(i, j++) = q;
        ++i;
    }
}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, 1.0); }

QMatrix QMatrix::scalar(std::size_t n, const Quaternion& s) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> entries) {
    QMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

QMatrix QMatrix::diagonal(std::initializer_list<Quaternion> entries) {
    return diagonal(std::span<const Quaternion>(entries.begin(), entries.size()));
}

QVector QMatrix::column(std::size_t j) const {
    QVector c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
}

void QMatrix::set_column(std::size_t j, std::span<const Quaternion> values) {
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, j) = values[i];
}

QMatrix QMatrix::leading_block(std::size_t m) const {
    QMatrix b(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b(i, j) = (*this)(i, j);
    return b;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(double s) {
    for (auto& q : data_) q *= s;
    return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(const QMatrix& a) { return a * -1.0; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size();
    QMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Quaternion& aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

QVector operator*(const QMatrix& a, std::span<const Quaternion> x) {
    const std::size_t n = a.size();
    QVector y(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

QMatrix operator*(const QMatrix& a, const Quaternion& s) {
    QMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) * s;
    return c;
}

QMatrix operator*(const Quaternion& s, const QMatrix& a) {
    QMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Quaternion trace(const QMatrix& t) {
    Quaternion acc;
    for (std::size_t i = 0; i < t.size(); ++i) acc += t(i, i);
    return acc;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix adjoint(const QMatrix& t) {
    const std::size_t n = t.size();
    QMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = t(j, i).conj();
    return a;
}

Eigen::MatrixXcd complex_adjoint(const QMatrix& t) {
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXcd chi(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Quaternion& q = t(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            const std::complex<double> z1(q.x0, q.x1);
            const std::complex<double> z2(q.x2, q.x3);
            chi(i, j) = z1;
            chi(i, n + j) = z2;
            chi(n + i, j) = -std::conj(z2);
            chi(n + i, n + j) = std::conj(z1);
        }
    }
    return chi;
}

QMatrix from_complex_adjoint(const Eigen::MatrixXcd& chi) {
    const Eigen::Index n = chi.rows() / 2;
    QMatrix t(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto z1 = chi(i, j);
            const auto z2 = chi(i, n + j);
            t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = {z1.real(), z1.imag(), z2.real(), z2.imag()};
        }
    return t;
}

Eigen::VectorXcd complex_vector(std::span<const Quaternion> x) {
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::VectorXcd z(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Quaternion& q = x[static_cast<std::size_t>(i)];
        z(i) = {q.x0, q.x1};
        z(n + i) = -std::conj(std::complex<double>(q.x2, q.x3));
    }
    return z;
}

QVector from_complex_vector(const Eigen::VectorXcd& z) {
    const Eigen::Index n = z.size() / 2;
    QVector x(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto x1 = z(i);
        const auto x2 = -std::conj(z(n + i));
        x[static_cast<std::size_t>(i)] = {x1.real(), x1.imag(), x2.real(), x2.imag()};
    }
    return x;
}

Eigen::VectorXd complex_adjoint_singular_values(const QMatrix& t) {
    if (t.size() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_adjoint(t));
    return svd.singularValues();
}

double operator_norm(const QMatrix& t) {
    if (t.size() == 0) return 0.0;
    return complex_adjoint_singular_values(t)(0);
}

double smallest_singular_value(const QMatrix& t) {
    if (t.size() == 0) return 0.0;
    const auto sv = complex_adjoint_singular_values(t);
    return sv(sv.size() - 1);
}

double frobenius_norm(const QMatrix& t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) acc += t(i, j).norm2();
    return std::sqrt(acc);
}

QMatrix inverse(const QMatrix& t) {
    const std::size_t n = t.size();
    QMatrix a = t;
    QMatrix inv = QMatrix::identity(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, t(i, j).norm());
    const double tiny = 64.0 * std::numeric_limits<double>::epsilon() * scale;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = a(k, k).norm();
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = a(r, k).norm();
            if (m > best) {
                best = m;
                pivot = r;
            }
        }
        if (!(best > tiny)) throw Error(ErrorKind::Singular, "matrix is not invertible");
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(pivot, c));
                std::swap(inv(k, c), inv(pivot, c));
            }
        }
        const Quaternion p_inv = a(k, k).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a(k, c) = p_inv * a(k, c);
            inv(k, c) = p_inv * inv(k, c);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k) continue;
            const Quaternion f = a(r, k);
            if (f == Quaternion{}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

bool is_normal(const QMatrix& t, double tol) {
    const double nt = operator_norm(t);
    if (nt == 0.0) return true;
    const QMatrix ta = adjoint(t);
    return operator_norm(t * ta - ta * t) < tol * nt * nt;
}

Classification classify(const QMatrix& t, double tol) {
    const std::size_t n = t.size();
    const double scale = std::max(1.0, operator_norm(t));
    const QMatrix ta = adjoint(t);
    const QMatrix id = QMatrix::identity(n);
    Classification c;
    c.selfadjoint = operator_norm(t - ta) <= tol * scale;
    c.anti_selfadjoint = operator_norm(t + ta) <= tol * scale;
    c.normal = operator_norm(t * ta - ta * t) <= tol * scale * scale;
    c.unitary = operator_norm(ta * t - id) <= tol && operator_norm(t * ta - id) <= tol;
    if (c.selfadjoint) {
        const auto eig = hermitian_eigen(t);
        c.positive = eig.values.empty() || eig.values.front() >= -tol * scale;
    }
    return c;
}

HermitianEigen hermitian_eigen(const QMatrix& h) {
    const std::size_t n = h.size();
    const Eigen::MatrixXcd chi = complex_adjoint(h);
    const Eigen::MatrixXcd sym = 0.5 * (chi + chi.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NumericalFailure, "selfadjoint eigensolver failed");

    // Each quaternionic eigenvector x shows up in chi as the pair psi(x), psi(x e2).
    // Pivoted Gram-Schmidt over H keeps one representative per pair.
    std::vector<QVector> candidates;
    candidates.reserve(2 * n);
    for (Eigen::Index k = 0; k < solver.eigenvectors().cols(); ++k)
        candidates.push_back(from_complex_vector(solver.eigenvectors().col(k)));

    std::vector<bool> used(candidates.size(), false);
    std::vector<std::pair<double, QVector>> picked;
    std::vector<QVector> basis;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best_index = candidates.size();
        double best_norm = -1.0;
        QVector best_residual;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (used[c]) continue;
            QVector r = candidates[c];
            for (const auto& b : basis) r = r - b * inner(b, r);
            const double rn = norm(r);
            if (rn > best_norm) {
                best_norm = rn;
                best_index = c;
                best_residual = std::move(r);
            }
        }
        if (best_index == candidates.size() || best_norm < 1e-6)
            throw Error(ErrorKind::NumericalFailure, "could not extract a quaternionic eigenbasis");
        used[best_index] = true;
        // One more projection pass for orthogonality.
        for (const auto& b : basis) best_residual = best_residual - b * inner(b, best_residual);
        best_residual = best_residual * (1.0 / norm(best_residual));
        basis.push_back(best_residual);
        picked.emplace_back(solver.eigenvalues()(static_cast<Eigen::Index>(best_index)), best_residual);
    }
    std::stable_sort(picked.begin(), picked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    HermitianEigen out{std::vector<double>(n), QMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = picked[k].first;
        out.vectors.set_column(k, picked[k].second);
    }
    return out;
}

namespace {

// V diag(f(values)) V*
template <typename F>
QMatrix spectral_function(const HermitianEigen& eig, F f) {
    const std::size_t n = eig.values.size();
    QMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = f(eig.values[k]);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Quaternion left = eig.vectors(i, k) * w;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += left * eig.vectors(j, k).conj();
        }
    }
    return out;
}

// x s y*
QMatrix outer(std::span<const Quaternion> x, const Quaternion& s, std::span<const Quaternion> y) {
    const std::size_t n = x.size();
    QMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Quaternion left = x[i] * s;
        for (std::size_t j = 0; j < n; ++j) out(i, j) = left * y[j].conj();
    }
    return out;
}

}  // namespace

QMatrix sqrt_positive(const QMatrix& p) {
    return spectral_function(hermitian_eigen(p), [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

QMatrix absolute_value(const QMatrix& t) { return sqrt_positive(adjoint(t) * t); }

QMatrix orthonormalize_columns(const QMatrix& a) {
    const std::size_t n = a.size();
    QMatrix q(n);
    double scale = frobenius_norm(a);
    for (std::size_t j = 0; j < n; ++j) {
        QVector v = a.column(j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const QVector b = q.column(k);
                v = v - b * inner(b, v);
            }
        const double nv = norm(v);
        if (!(nv > 1e-12 * scale)) throw Error(ErrorKind::Singular, "columns are linearly dependent");
        q.set_column(j, v * (1.0 / nv));
    }
    return q;
}

NormalDecomposition normal_decompose(const QMatrix& t, const ImaginaryUnit& unit) {
    const std::size_t n = t.size();
    if (!is_normal(t)) throw Error(ErrorKind::NotNormal, "normal_decompose requires T T* = T* T");
    const QMatrix ta = adjoint(t);
    NormalDecomposition d;
    d.a = 0.5 * (t + ta);
    const QMatrix c = 0.5 * (t - ta);

    const auto eig = hermitian_eigen(adjoint(c) * c);
    const double cutoff = 1e-8 * std::max(operator_norm(t), std::numeric_limits<double>::min());
    std::vector<std::size_t> kernel;
    QMatrix b_pinv(n);
    d.b = QMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        // ||C w|| rather than sqrt of the eigenvalue: rounding in C*C would be amplified by the root.
        const QVector w = eig.vectors.column(k);
        const double sigma = norm(c * w);
        d.b += outer(w, sigma, w);
        if (sigma <= cutoff) {
            kernel.push_back(k);
        } else {
            b_pinv += outer(w, 1.0 / sigma, w);
        }
    }
    d.j = c * b_pinv;
    if (kernel.empty()) return d;

    QMatrix proj(n);
    for (std::size_t k : kernel) {
        const QVector w = eig.vectors.column(k);
        proj += outer(w, 1.0, w);
    }
    const QMatrix left_mult = QMatrix::scalar(n, unit.value());
    const QMatrix standard = proj * left_mult * proj;
    const double scale = std::max(1.0, operator_norm(t));
    const bool standard_ok = operator_norm(standard * standard + proj) < 1e-9 &&
                             operator_norm(commutator(standard, d.a)) < 1e-9 * scale;
    if (standard_ok) {
        d.j += standard;
        return d;
    }

    // Diagonalize A on the kernel and take left multiplication in that basis.
    const std::size_t m = kernel.size();
    std::vector<QVector> basis;
    for (std::size_t k : kernel) basis.push_back(eig.vectors.column(k));
    QMatrix a_kernel(m);
    for (std::size_t r = 0; r < m; ++r) {
        const QVector ab = d.a * basis[r];
        for (std::size_t s = 0; s < m; ++s) a_kernel(s, r) = inner(basis[s], ab);
    }
    const auto sub = hermitian_eigen(0.5 * (a_kernel + adjoint(a_kernel)));
    for (std::size_t k = 0; k < m; ++k) {
        QVector x(n);
        for (std::size_t s = 0; s < m; ++s) x = x + basis[s] * sub.vectors(s, k);
        d.j += outer(x, unit.value(), x);
    }
    return d;
}

PolarDecomposition polar_decompose(const QMatrix& t) {
    if (!(smallest_singular_value(t) > 1e-10)) throw Error(ErrorKind::Singular, "polar_decompose requires invertible T");
    const auto eig = hermitian_eigen(adjoint(t) * t);
    PolarDecomposition d;
    d.p = spectral_function(eig, [](double x) { return std::sqrt(std::max(x, 0.0)); });
    d.u = t * spectral_function(eig, [](double x) { return 1.0 / std::sqrt(x); });
    return d;
}

}  // namespace qspectral
