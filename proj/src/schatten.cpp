#include "qspectral/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qspectral/error.hpp"
#include "qspectral/spectrum.hpp"

namespace qspectral {

std::vector<double> singular_value_list(const QMatrix& t) {
    const Eigen::VectorXd sv = complex_adjoint_singular_values(t);
    std::vector<double> out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(2 * k);
        out[k] = 0.5 * (sv(i) + sv(i + 1));
    }
    return out;
}

SingularValueDecomposition singular_values(const QMatrix& t) {
    const std::size_t n = t.size();
    SingularValueDecomposition d{singular_value_list(t), QMatrix(n), QMatrix(n)};
    if (n == 0) return d;

    const HermitianEigen eig = hermitian_eigen(adjoint(t) * t);
    const double cutoff = 1e-12 * std::max(d.lambdas.front(), std::numeric_limits<double>::min());
    std::vector<QVector> left;
    for (std::size_t k = 0; k < n; ++k) {
        const QVector e = eig.vectors.column(n - 1 - k);
        d.right.set_column(k, e);
        if (d.lambdas[k] > cutoff) {
            QVector s = t * e;
            s = s * (1.0 / norm(s));
            left.push_back(s);
        }
    }
    // Complete the left factor for zero singular values with standard basis vectors.
    for (std::size_t i = 0; i < n && left.size() < n; ++i) {
        QVector c(n);
        c[i] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : left) c = c - b * inner(b, c);
        const double nc = norm(c);
        if (nc > 1e-6) left.push_back(c * (1.0 / nc));
    }
    for (std::size_t k = 0; k < n; ++k) d.left.set_column(k, left[k]);
    return d;
}

QMatrix SingularValueDecomposition::reconstruct() const {
    const std::size_t n = lambdas.size();
    QMatrix out(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const Quaternion l = left(i, k) * lambdas[k];
            for (std::size_t j = 0; j < n; ++j) out(i, j) += l * right(j, k).conj();
        }
    return out;
}

double schatten_norm(std::span<const double> lambdas, double p) {
    if (std::isnan(p) || p < 1.0) throw Error(ErrorKind::BadExponent, "Schatten exponent must satisfy p >= 1");
    if (lambdas.empty()) return 0.0;
    const double top = *std::max_element(lambdas.begin(), lambdas.end());
    if (std::isinf(p) || top == 0.0) return top;
    if (top > 1e-100 && top < 1e100 && p <= 2.0) {
        double acc = 0.0;
        for (double l : lambdas) acc += std::pow(l, p);
        return std::pow(acc, 1.0 / p);
    }
    // Rescale by the largest value so large exponents do not overflow.
    double acc = 0.0;
    for (double l : lambdas) acc += std::pow(l / top, p);
    return top * std::pow(acc, 1.0 / p);
}

double schatten_norm(const QMatrix& t, double p) {
    if (std::isnan(p) || p < 1.0) throw Error(ErrorKind::BadExponent, "Schatten exponent must satisfy p >= 1");
    return schatten_norm(singular_value_list(t), p);
}

bool commutes_with(const QMatrix& t, const QMatrix& j, double tol) {
    return operator_norm(commutator(t, j)) <= tol * std::max(1.0, operator_norm(t));
}

InequalityReport check_ideal_inequalities(const QMatrix& t, const QMatrix& a, double p) {
    InequalityReport r;
    const double norm_a = operator_norm(a);
    const double tp = schatten_norm(t, p);
    r.left_ideal_lhs = schatten_norm(a * t, p);
    r.right_ideal_lhs = schatten_norm(t * a, p);
    r.ideal_rhs = norm_a * tp;
    auto slack = [](double rhs) { return 1e-9 * std::max(1.0, std::abs(rhs)); };
    auto fail = [&r](const std::string& what, double lhs, double rhs) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": " << lhs << " > " << rhs;
        r.violations.push_back(os.str());
    };
    if (r.left_ideal_lhs > r.ideal_rhs + slack(r.ideal_rhs)) fail("||A T||_p <= ||A|| ||T||_p", r.left_ideal_lhs, r.ideal_rhs);
    if (r.right_ideal_lhs > r.ideal_rhs + slack(r.ideal_rhs)) fail("||T A||_p <= ||A|| ||T||_p", r.right_ideal_lhs, r.ideal_rhs);

    const auto l1 = singular_value_list(t);
    const auto l2 = singular_value_list(a);
    const auto lsum = singular_value_list(t + a);
    const auto lprod = singular_value_list(t * a);
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; i + m < n; ++m) {
            const double sum_rhs = l1[i] + l2[m];
            ++r.sum_checks;
            if (lsum[i + m] > sum_rhs + slack(sum_rhs))
                fail("lambda_" + std::to_string(i + m + 1) + "(T1+T2) sum bound", lsum[i + m], sum_rhs);
            const double prod_rhs = l1[i] * l2[m];
            ++r.product_checks;
            if (lprod[i + m] > prod_rhs + slack(prod_rhs))
                fail("lambda_" + std::to_string(i + m + 1) + "(T1 T2) product bound", lprod[i + m], prod_rhs);
        }
    return r;
}

DeltaValue delta_k(const QMatrix& t, int k, const ImaginaryUnit& unit) {
    if (k < 1) throw Error(ErrorKind::BadArgument, "delta_k requires k >= 1");
    const SpectrumResult sigma = s_spectrum(t);
    const double zero_tol = 1e-12 * (1.0 + operator_norm(t));
    std::complex<double> product(1.0, 0.0);
    for (const auto& sphere : sigma.spheres) {
        const std::complex<double> s(sphere.point.u, sphere.point.v);
        if (std::abs(s) <= zero_tol) continue;
        std::complex<double> exponent(0.0, 0.0);
        std::complex<double> power(1.0, 0.0);
        for (int j = 1; j <= k - 1; ++j) {
            power *= s;
            exponent += (j % 2 == 0 ? 1.0 : -1.0) * power / static_cast<double>(j);
        }
        const std::complex<double> factor = (1.0 + s) * std::exp(exponent);
        for (int m = 0; m < sphere.multiplicity; ++m) product *= factor;
    }
    return {product, unit};
}

}  // namespace qspectral
