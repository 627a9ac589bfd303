#include "qspectral/random.hpp"

#include <vector>

#include "qspectral/error.hpp"

namespace qspectral {

Quaternion random_quaternion(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double a = g(rng);
    const double b = g(rng);
    const double c = g(rng);
    const double d = g(rng);
    return {a, b, c, d};
}

ImaginaryUnit random_unit(Rng& rng) {
    for (;;) {
        const Quaternion q = random_quaternion(rng);
        if (q.imag_norm() > 1e-3) return ImaginaryUnit::normalized(q.x1, q.x2, q.x3);
    }
}

QMatrix random_matrix(std::size_t n, Rng& rng) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_quaternion(rng);
    return m;
}

QVector random_vector(std::size_t n, Rng& rng) {
    QVector v(n);
    for (auto& q : v) q = random_quaternion(rng);
    return v;
}

QMatrix random_unitary(std::size_t n, Rng& rng) {
    for (;;) {
        try {
            return orthonormalize_columns(random_matrix(n, rng));
        } catch (const Error&) {
            // dependent columns have probability zero; draw again
        }
    }
}

QMatrix random_normal_with_spectrum(std::span<const SpherePoint> spheres, Rng& rng) {
    const std::size_t n = spheres.size();
    std::vector<Quaternion> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = Quaternion(spheres[k].u, spheres[k].v, 0.0, 0.0);
    const QMatrix u = random_unitary(n, rng);
    return u * QMatrix::diagonal(d) * adjoint(u);
}

QMatrix random_normal(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<SpherePoint> spheres;
    for (std::size_t k = 0; k < n; ++k) {
        const double u = g(rng);
        const double v = g(rng);
        spheres.emplace_back(u, v);
    }
    return random_normal_with_spectrum(spheres, rng);
}

}  // namespace qspectral
