#pragma once

// Singular values, Schatten p-norms and the regularized determinant delta_{k,J}.

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "qspectral/qmatrix.hpp"

namespace qspectral {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// T x = sum_n left_n lambda_n <right_n, x>, lambdas non-increasing.
struct SingularValueDecomposition {
    std::vector<double> lambdas;
    QMatrix left;   // columns sigma_n
    QMatrix right;  // columns e_n, eigenvectors of |T|

    QMatrix reconstruct() const;
};

SingularValueDecomposition singular_values(const QMatrix& t);

/// Singular values only; each pair of chi(T) singular values is averaged.
std::vector<double> singular_value_list(const QMatrix& t);

/// (sum lambda_n^p)^(1/p), or lambda_1 for p = kInfinity. Throws BadExponent for p < 1.
double schatten_norm(const QMatrix& t, double p);
double schatten_norm(std::span<const double> lambdas, double p);

/// T J = J T within tol ||T||, i.e. membership of the commutation constraint of S_p(J).
bool commutes_with(const QMatrix& t, const QMatrix& j, double tol = 1e-10);

struct InequalityReport {
    double left_ideal_lhs = 0.0;   // ||A T||_p
    double right_ideal_lhs = 0.0;  // ||T A||_p
    double ideal_rhs = 0.0;        // ||A|| ||T||_p
    int sum_checks = 0;            // lambda_{n+m+1}(T + A) <= lambda_{n+1}(T) + lambda_{m+1}(A)
    int product_checks = 0;        // lambda_{n+m+1}(T A) <= lambda_{n+1}(T) lambda_{m+1}(A)
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Ideal inequalities for (A, T) and the singular value inequalities for T1 = T, T2 = A,
/// with slack 1e-9 max(1, rhs).
InequalityReport check_ideal_inequalities(const QMatrix& t, const QMatrix& a, double p);

struct DeltaValue {
    std::complex<double> value;  // coordinates in the slice C_J
    ImaginaryUnit unit;

    Quaternion as_quaternion() const { return unit.point(value); }
};

/// prod_l (1 + s_l) exp(sum_{j=1}^{k-1} (-1)^j s_l^j / j) over the non-zero spheres of the
/// S-spectrum, represented by u + J v with v >= 0 and repeated by multiplicity.
DeltaValue delta_k(const QMatrix& t, int k, const ImaginaryUnit& unit);

}  // namespace qspectral
