#pragma once

// Square quaternionic matrices acting right-linearly on column vectors of H^n,
// (T x)_i = sum_j T_ij x_j, together with the complex adjoint embedding
// chi(T) = [[T1, T2], [-conj(T2), conj(T1)]] for T = T1 + T2 e2.

#include <Eigen/Core>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qspectral/quaternion.hpp"

namespace qspectral {

using QVector = std::vector<Quaternion>;

/// <x, y> = sum_i conj(x_i) y_i
Quaternion inner(std::span<const Quaternion> x, std::span<const Quaternion> y);
double norm(std::span<const Quaternion> x);
/// Right scalar action (x s)_i = x_i s.
QVector operator*(QVector x, const Quaternion& s);
QVector operator+(QVector x, const QVector& y);
QVector operator-(QVector x, const QVector& y);

class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(std::size_t n) : n_(n), data_(n * n) {}
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix zero(std::size_t n) { return QMatrix(n); }
    static QMatrix identity(std::size_t n);
    static QMatrix scalar(std::size_t n, const Quaternion& s);
    static QMatrix diagonal(std::span<const Quaternion> entries);
    static QMatrix diagonal(std::initializer_list<Quaternion> entries);

    std::size_t size() const { return n_; }

    Quaternion& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    QVector column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Quaternion> values);

    /// Leading m x m block.
    QMatrix leading_block(std::size_t m) const;

    QMatrix& operator+=(const QMatrix& other);
    QMatrix& operator-=(const QMatrix& other);
    QMatrix& operator*=(double s);

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, std::span<const Quaternion> x);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);
/// Right scalar multiplication (T s)_ij = T_ij s, i.e. T composed with right multiplication by s.
QMatrix operator*(const QMatrix& a, const Quaternion& s);
/// Left scalar multiplication (s T)_ij = s T_ij.
QMatrix operator*(const Quaternion& s, const QMatrix& a);

Quaternion trace(const QMatrix& t);
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// (T*)_ij = conj(T_ji)
QMatrix adjoint(const QMatrix& t);

Eigen::MatrixXcd complex_adjoint(const QMatrix& t);
/// Inverse of complex_adjoint; reads T1 and T2 from the top block row.
QMatrix from_complex_adjoint(const Eigen::MatrixXcd& chi);
/// Embedding psi(x) = [x1; -conj(x2)] of x = x1 + x2 e2, so chi(T) psi(x) = psi(T x).
Eigen::VectorXcd complex_vector(std::span<const Quaternion> x);
QVector from_complex_vector(const Eigen::VectorXcd& z);

/// Singular values of chi(T), non-increasing; each quaternionic singular value appears twice.
Eigen::VectorXd complex_adjoint_singular_values(const QMatrix& t);
double operator_norm(const QMatrix& t);
double smallest_singular_value(const QMatrix& t);
double frobenius_norm(const QMatrix& t);

/// Gauss-Jordan elimination with row operations applied from the left.
/// Throws Singular when no usable pivot remains.
QMatrix inverse(const QMatrix& t);

struct Classification {
    bool selfadjoint = false;
    bool anti_selfadjoint = false;
    bool normal = false;
    bool unitary = false;
    bool positive = false;
};

/// Structural properties of T within a tolerance relative to max(1, ||T||).
Classification classify(const QMatrix& t, double tol = 1e-10);

/// ||T T* - T* T|| < tol ||T||^2
bool is_normal(const QMatrix& t, double tol = 1e-10);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    QMatrix vectors;             // orthonormal columns, T v_k = v_k values[k]
};

/// Eigendecomposition of a selfadjoint quaternionic matrix through chi(H).
HermitianEigen hermitian_eigen(const QMatrix& h);

/// Square root of a positive operator; negative rounding noise in the spectrum is clipped.
QMatrix sqrt_positive(const QMatrix& p);

/// |T| = sqrt(T* T)
QMatrix absolute_value(const QMatrix& t);

/// Gram-Schmidt over H on the columns of a; throws Singular if they are dependent.
QMatrix orthonormalize_columns(const QMatrix& a);

struct NormalDecomposition {
    QMatrix a;  // (T + T*)/2
    QMatrix j;  // anti-selfadjoint unitary
    QMatrix b;  // |(T - T*)/2|
};

/// T = A + J B for a normal T. J is unique on ker(T - T*)^perp; on the kernel it is
/// left multiplication by `unit` in the standard basis when that commutes with A
/// and is unitary there, otherwise in an orthonormal eigenbasis of A restricted to the kernel.
NormalDecomposition normal_decompose(const QMatrix& t, const ImaginaryUnit& unit = ImaginaryUnit::e1());

struct PolarDecomposition {
    QMatrix u;
    QMatrix p;
};

/// T = U P with P = |T|; invertible T only.
PolarDecomposition polar_decompose(const QMatrix& t);

}  // namespace qspectral
