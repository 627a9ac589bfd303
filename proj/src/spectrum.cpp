#include "qspectral/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qspectral/error.hpp"

namespace qspectral {

double SpectrumResult::distance_to(const SpherePoint& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : spheres) best = std::min(best, sphere_distance(s.point, p));
    return best;
}

double SpectrumResult::max_modulus() const {
    double best = 0.0;
    for (const auto& s : spheres) best = std::max(best, s.point.modulus());
    return best;
}

double directed_distance(const SpectrumResult& a, const SpectrumResult& b) {
    double worst = 0.0;
    for (const auto& s : a.spheres) worst = std::max(worst, b.distance_to(s.point));
    return worst;
}

double hausdorff_distance(const SpectrumResult& a, const SpectrumResult& b) {
    return std::max(directed_distance(a, b), directed_distance(b, a));
}

SpectrumResult s_spectrum(const QMatrix& t) {
    const std::size_t n = t.size();
    SpectrumResult result;
    if (n == 0) return result;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(complex_adjoint(t), false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NumericalFailure, "complex eigensolver did not converge");

    std::vector<SpherePoint> points;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const auto z = solver.eigenvalues()(k);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorKind::NumericalFailure, "non-finite eigenvalue");
        points.emplace_back(z.real(), z.imag());
    }

    // Single-linkage clustering in the (u, v) half plane.
    const double tol = 1e-8 * (1.0 + operator_norm(t));
    std::vector<std::size_t> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (sphere_distance(points[i], points[j]) <= tol) parent[find(i)] = find(j);

    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (find(i) == i) roots.push_back(i);

    int total = 0;
    for (std::size_t r : roots) {
        double su = 0.0;
        double sv = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (find(i) != r) continue;
            su += points[i].u;
            sv += points[i].v;
            ++count;
        }
        const int mult = std::max(1, (count + 1) / 2);
        total += mult;
        result.spheres.push_back({SpherePoint(su / count, sv / count), mult});
    }
    if (total != static_cast<int>(n)) {
        // An odd split of a conjugate pair; fold the surplus into the largest cluster.
        auto it = std::max_element(result.spheres.begin(), result.spheres.end(),
                                   [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
        it->multiplicity -= total - static_cast<int>(n);
        if (it->multiplicity < 1) throw Error(ErrorKind::NumericalFailure, "inconsistent eigenvalue multiplicities");
    }
    std::sort(result.spheres.begin(), result.spheres.end(), [](const auto& a, const auto& b) {
        return a.point.u != b.point.u ? a.point.u < b.point.u : a.point.v < b.point.v;
    });
    return result;
}

SpectrumResult full_s_spectrum(const QMatrix& t) { return s_spectrum(t); }

QMatrix quadratic_pencil(const QMatrix& t, const Quaternion& s) {
    // (T - s0 I)^2 + |Im s|^2 I avoids the cancellation of T^2 - 2 s0 T + |s|^2 I near the spectrum.
    QMatrix shifted = t;
    for (std::size_t i = 0; i < t.size(); ++i) shifted(i, i) -= s.real();
    QMatrix p = shifted * shifted;
    const double v2 = s.x1 * s.x1 + s.x2 * s.x2 + s.x3 * s.x3;
    for (std::size_t i = 0; i < t.size(); ++i) p(i, i) += v2;
    return p;
}

bool in_resolvent_set(const QMatrix& t, const Quaternion& s) {
    const double scale = 1.0 + operator_norm(t);
    return smallest_singular_value(quadratic_pencil(t, s)) > 1e-10 * scale * scale;
}

QVector approximate_eigenvector(const QMatrix& t, const Quaternion& s) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_adjoint(quadratic_pencil(t, s)), Eigen::ComputeFullV);
    const Eigen::VectorXcd v = svd.matrixV().col(svd.matrixV().cols() - 1);
    QVector x = from_complex_vector(v);
    return x * (1.0 / norm(x));
}

PseudoResolvent pseudo_resolvent(const QMatrix& t, const Quaternion& s) {
    if (!in_resolvent_set(t, s)) throw Error(ErrorKind::OnSpectrum, "s lies on the S-spectrum");
    return {s, inverse(quadratic_pencil(t, s))};
}

QMatrix s_resolvent_left(const QMatrix& t, const QMatrix& q, const Quaternion& s) {
    return -(q * (t - QMatrix::scalar(t.size(), s.conj())));
}

QMatrix s_resolvent_right(const QMatrix& t, const QMatrix& q, const Quaternion& s) {
    return -((t - QMatrix::scalar(t.size(), s.conj())) * q);
}

QMatrix s_resolvent_left(const QMatrix& t, const Quaternion& s) {
    return s_resolvent_left(t, pseudo_resolvent(t, s).value, s);
}

QMatrix s_resolvent_right(const QMatrix& t, const Quaternion& s) {
    return s_resolvent_right(t, pseudo_resolvent(t, s).value, s);
}

ResolventEquationResidual verify_s_resolvent_equation(const QMatrix& t, const Quaternion& s, const Quaternion& p) {
    const Quaternion first_factor = p * p - 2.0 * s.real() * p + s.norm2();
    const Quaternion second_factor = s * s - 2.0 * p.real() * s + p.norm2();
    const double scalar_scale = (1.0 + s.norm() + p.norm()) * (1.0 + s.norm() + p.norm());
    if (first_factor.norm() <= 1e-12 * scalar_scale || second_factor.norm() <= 1e-12 * scalar_scale)
        throw Error(ErrorKind::SameSphere, "s and p lie on the same sphere");

    const QMatrix sr = s_resolvent_right(t, s);
    const QMatrix sl = s_resolvent_left(t, p);
    const QMatrix lhs = sr * sl;

    // Both forms use S_R^{-1}(s,T) - S_L^{-1}(p,T).
    const QMatrix diff = sr - sl;
    const QMatrix first = (diff * p - s.conj() * diff) * first_factor.inverse();
    const QMatrix second = second_factor.inverse() * (diff * p.conj() - s * diff);

    return {operator_norm(lhs - first), operator_norm(lhs - second), operator_norm(first - second)};
}

SpectralRadius spectral_radius(const QMatrix& t, int max_power) {
    if (max_power < 1) throw Error(ErrorKind::BadArgument, "max_power must be >= 1");
    SpectralRadius r;
    r.exact = s_spectrum(t).max_modulus();
    const double nt = operator_norm(t);
    if (nt == 0.0) {
        for (long p = 1; p <= max_power; p *= 2) r.sequence.push_back(0.0);
        return r;
    }
    // Track log ||(T/||T||)^(2^k)|| and keep the running power normalized.
    QMatrix power = t * (1.0 / nt);
    double log_norm = 0.0;
    bool vanished = false;
    r.sequence.push_back(nt);
    for (long p = 2; p <= max_power; p *= 2) {
        if (!vanished) {
            power = power * power;
            const double m = operator_norm(power);
            if (m == 0.0) {
                vanished = true;
            } else {
                log_norm = 2.0 * log_norm + std::log(m);
                power *= 1.0 / m;
            }
        }
        r.sequence.push_back(vanished ? 0.0 : nt * std::exp(log_norm / static_cast<double>(p)));
    }
    return r;
}

ResolventBound normal_resolvent_bound(const QMatrix& t, const Quaternion& s) {
    if (!is_normal(t)) throw Error(ErrorKind::NotNormal, "resolvent bound requires a normal operator");
    const PseudoResolvent q = pseudo_resolvent(t, s);
    const double dist = s_spectrum(t).distance_to(SpherePoint::of(s));
    return {operator_norm(q.value), 1.0 / (dist * dist)};
}

double weyl_factorization_residual(const QMatrix& a, const QMatrix& k, const Quaternion& s) {
    const std::size_t n = a.size();
    const double s0 = s.real();
    const QMatrix ak = a + k;
    const QMatrix lhs = quadratic_pencil(ak, s);
    const QMatrix pa = quadratic_pencil(a, s);
    const QMatrix q = pseudo_resolvent(a, s).value;
    const QMatrix inner_term = k * k + a * k + k * a - (2.0 * s0) * k;
    const QMatrix rhs = pa * (QMatrix::identity(n) + q * inner_term);
    return operator_norm(lhs - rhs);
}

}  // namespace qspectral
