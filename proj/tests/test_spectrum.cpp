#include <doctest.h>

#include <cmath>

#include "qspectral/error.hpp"
#include "qspectral/random.hpp"
#include "qspectral/spectrum.hpp"
#include "support.hpp"

using namespace qspectral;
using qtest::max_entry_diff;

namespace {

const Quaternion e1 = Quaternion::e1();
const Quaternion e2 = Quaternion::e2();

// Sphere list from the real-form oracle: each sphere appears 2 * multiplicity times.
SpectrumResult oracle_spectrum(const QMatrix& t) {
    SpectrumResult r;
    for (auto z : qtest::oracle_eigenvalues(t)) r.spheres.push_back({SpherePoint(z.real(), z.imag()), 1});
    return r;
}

}  // namespace

TEST_CASE("spectrum examples") {
    const auto a = s_spectrum(QMatrix::diagonal({1.0, 2.0}));
    REQUIRE(a.spheres.size() == 2);
    CHECK(a.spheres[0].point.u == doctest::Approx(1.0));
    CHECK(a.spheres[0].point.v == doctest::Approx(0.0));
    CHECK(a.spheres[0].multiplicity == 1);
    CHECK(a.spheres[1].point.u == doctest::Approx(2.0));
    CHECK(a.spheres[1].multiplicity == 1);

    const auto b = s_spectrum(QMatrix::diagonal({e1}));
    REQUIRE(b.spheres.size() == 1);
    CHECK(std::abs(b.spheres[0].point.u) < 1e-14);
    CHECK(b.spheres[0].point.v == doctest::Approx(1.0));
    CHECK(b.spheres[0].multiplicity == 1);

    const auto c = s_spectrum(QMatrix::diagonal({e1, e2}));
    REQUIRE(c.spheres.size() == 1);
    CHECK(c.spheres[0].point.v == doctest::Approx(1.0));
    CHECK(c.spheres[0].multiplicity == 2);

    const auto id = s_spectrum(QMatrix::identity(2));
    REQUIRE(id.spheres.size() == 1);
    CHECK(id.spheres[0].multiplicity == 2);
}

TEST_CASE("spectrum matches the real-form oracle and the pencil is singular there") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 1 + i % 7;
        const QMatrix t = random_matrix(n, rng);
        const SpectrumResult sigma = s_spectrum(t);
        int total = 0;
        for (const auto& s : sigma.spheres) total += s.multiplicity;
        CHECK(total == static_cast<int>(n));
        const double scale = (1 + operator_norm(t)) * (1 + operator_norm(t));
        CHECK(hausdorff_distance(sigma, oracle_spectrum(t)) < 1e-7 * (1 + operator_norm(t)));
        for (const auto& s : sigma.spheres) {
            const Quaternion rep = s.point.representative(random_unit(rng));
            CHECK(smallest_singular_value(quadratic_pencil(t, rep)) < 1e-8 * scale);
            const QVector x = approximate_eigenvector(t, rep);
            CHECK(norm(quadratic_pencil(t, rep) * x) < 1e-7 * scale);
        }
    }
}

TEST_CASE("spectrum is unitarily invariant") {
    Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + i % 5;
        const QMatrix t = random_matrix(n, rng);
        const QMatrix u = random_unitary(n, rng);
        CHECK(hausdorff_distance(s_spectrum(adjoint(u) * t * u), s_spectrum(t)) < 1e-9 * (1 + operator_norm(t)));
    }
}

TEST_CASE("pseudo-resolvent examples") {
    CHECK(max_entry_diff(pseudo_resolvent(QMatrix(2), 2.0).value, QMatrix::scalar(2, 0.25)) < 1e-15);
    CHECK(max_entry_diff(pseudo_resolvent(QMatrix::diagonal({1.0}), 3.0).value, QMatrix::scalar(1, 0.25)) < 1e-15);
    CHECK(max_entry_diff(pseudo_resolvent(QMatrix::diagonal({e1}), 2.0 * e1).value, QMatrix::scalar(1, 1.0 / 3.0)) < 1e-15);
    CHECK_THROWS_AS(pseudo_resolvent(QMatrix::diagonal({e1}), e2), Error);
    CHECK_THROWS_AS(pseudo_resolvent(QMatrix::diagonal({1.0, 2.0}), 2.0), Error);
    CHECK_FALSE(in_resolvent_set(QMatrix::diagonal({Quaternion(1, 1, 0, 0)}), Quaternion(1, 0, 0.6, 0.8)));
}

TEST_CASE("S-resolvent examples") {
    const Quaternion s(0.5, -1.0, 2.0, 0.25);
    const QMatrix expected = QMatrix::scalar(3, s.conj() * (1.0 / s.norm2()));
    CHECK(max_entry_diff(s_resolvent_left(QMatrix(3), s), expected) < 1e-15);
    CHECK(max_entry_diff(s_resolvent_right(QMatrix(3), s), expected) < 1e-15);
    CHECK(max_entry_diff(s_resolvent_left(QMatrix::diagonal({1.0}), 3.0), QMatrix::scalar(1, 0.5)) < 1e-15);
    CHECK(max_entry_diff(s_resolvent_right(QMatrix::diagonal({1.0}), 3.0), QMatrix::scalar(1, 0.5)) < 1e-15);
    CHECK(max_entry_diff(s_resolvent_left(QMatrix::diagonal({e1}), 2.0 * e1), QMatrix::scalar(1, -e1)) < 1e-15);
}

TEST_CASE("S-resolvent at real s is the classical resolvent") {
    Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + i % 5;
        const QMatrix t = random_matrix(n, rng);
        const double s = 3.0 + 2.0 * operator_norm(t);
        const QMatrix classical = inverse(QMatrix::scalar(n, s) - t);
        CHECK(max_entry_diff(s_resolvent_left(t, s), classical) < 1e-13);
        CHECK(max_entry_diff(s_resolvent_right(t, s), classical) < 1e-13);
    }
}

TEST_CASE("S-resolvent equation examples") {
    const auto r0 = verify_s_resolvent_equation(QMatrix(2), 2.0, 3.0);
    CHECK(r0.first_form < 1e-12);
    CHECK(r0.second_form < 1e-12);
    const auto r1 = verify_s_resolvent_equation(QMatrix::identity(3), 2.0 * e1, 3.0);
    CHECK(r1.first_form < 1e-10);
    CHECK(r1.second_form < 1e-10);
    CHECK_THROWS_AS(verify_s_resolvent_equation(QMatrix(2), 2.0 * e1, 2.0 * e2), Error);
    CHECK_THROWS_AS(verify_s_resolvent_equation(QMatrix::diagonal({e1}), e2, 3.0), Error);
}

TEST_CASE("S-resolvent equation on random normal operators") {
    Rng rng(34);
    for (int i = 0; i < 30; ++i) {
        const QMatrix t = random_normal(4, rng);
        const Quaternion s = random_quaternion(rng) * 2.0, p = random_quaternion(rng) * 2.0;
        if (!in_resolvent_set(t, s) || !in_resolvent_set(t, p)) continue;
        const auto r = verify_s_resolvent_equation(t, s, p);
        const double dist = std::min(s_spectrum(t).distance_to(SpherePoint::of(s)), s_spectrum(t).distance_to(SpherePoint::of(p)));
        if (dist < 0.1) continue;
        CHECK(r.first_form < 1e-9);
        CHECK(r.second_form < 1e-9);
        CHECK(r.between_forms < 1e-10 * (1 + operator_norm(t)) * (1 + operator_norm(t)));
    }
}

TEST_CASE("left S-resolvent is slice regular in s") {
    // S_L(u + Jv) = alpha(u, v) + beta(u, v) J with the Cauchy-Riemann system in (u, v).
    Rng rng(35);
    const double h = 1e-4;
    int checked = 0;
    for (int i = 0; i < 40 && checked < 15; ++i) {
        const QMatrix t = random_matrix(1 + i % 4, rng);
        const ImaginaryUnit j = random_unit(rng);
        const double u = 2.0 * random_quaternion(rng).x0, v = 2.0 * random_quaternion(rng).x1;
        if (s_spectrum(t).distance_to(SpherePoint(u, v)) <= 0.5) continue;
        auto sl = [&](double a, double b) { return s_resolvent_left(t, j.point(a, b)); };
        auto alpha = [&](double a, double b) { return (sl(a, b) + sl(a, -b)) * 0.5; };
        auto beta = [&](double a, double b) { return -((sl(a, b) - sl(a, -b)) * j.value()) * 0.5; };
        const QMatrix du_alpha = (alpha(u + h, v) - alpha(u - h, v)) * (0.5 / h);
        const QMatrix dv_alpha = (alpha(u, v + h) - alpha(u, v - h)) * (0.5 / h);
        const QMatrix du_beta = (beta(u + h, v) - beta(u - h, v)) * (0.5 / h);
        const QMatrix dv_beta = (beta(u, v + h) - beta(u, v - h)) * (0.5 / h);
        CHECK(operator_norm(du_alpha - dv_beta) < 1e-5);
        CHECK(operator_norm(dv_alpha + du_beta) < 1e-5);
        // The decomposition reconstructs S_L.
        CHECK(max_entry_diff(alpha(u, v) + beta(u, v) * j.value(), sl(u, v)) < 1e-12 * (1 + operator_norm(sl(u, v))));
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("spectral radius examples") {
    Rng rng(36);
    const auto u = spectral_radius(random_unitary(4, rng));
    CHECK(u.exact == doctest::Approx(1.0).epsilon(1e-10));
    const auto d = spectral_radius(QMatrix::diagonal({1.0, 2.0}));
    CHECK(d.exact == doctest::Approx(2.0));
    CHECK(d.sequence.front() == doctest::Approx(2.0));
    CHECK(d.sequence.size() == 7);  // powers 1, 2, 4, ..., 64

    QMatrix nil(2);
    nil(0, 1) = e1;
    const auto z = spectral_radius(nil);
    CHECK(z.exact < 1e-7);
    CHECK(z.sequence.front() == doctest::Approx(1.0));
    for (std::size_t k = 1; k < z.sequence.size(); ++k) CHECK(z.sequence[k] == 0.0);
    CHECK_THROWS_AS(spectral_radius(nil, 0), Error);
}

TEST_CASE("spectral radius sequence tracks naive powers") {
    Rng rng(37);
    for (int i = 0; i < 10; ++i) {
        const QMatrix t = random_matrix(1 + i % 5, rng) * 0.5;
        const auto r = spectral_radius(t, 16);
        for (int k = 0; k <= 4; ++k) {
            const int p = 1 << k;
            const double naive = std::pow(qtest::oracle_norm(qtest::power(t, p)), 1.0 / p);
            CHECK(r.sequence[static_cast<std::size_t>(k)] == doctest::Approx(naive).epsilon(1e-10));
        }
    }
}

TEST_CASE("normal resolvent bound examples") {
    const auto a = normal_resolvent_bound(QMatrix::diagonal({1.0, 2.0}), 3.0);
    CHECK(a.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.rhs == doctest::Approx(1.0).epsilon(1e-12));
    const double eps = 1e-3;
    const auto b = normal_resolvent_bound(QMatrix::diagonal({1.0}), 1.0 + eps);
    CHECK(b.lhs == doctest::Approx(1.0 / (eps * eps)).epsilon(1e-9));
    CHECK(b.rhs == doctest::Approx(1.0 / (eps * eps)).epsilon(1e-9));
    const auto c = normal_resolvent_bound(QMatrix::diagonal({e1}), 3.0);
    CHECK(c.lhs == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(normal_resolvent_bound(QMatrix{{0.0, 1.0}, {0.0, 0.0}}, 3.0), Error);
}

TEST_CASE("Weyl factorization identity") {
    Rng rng(38);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + i % 5;
        const QMatrix a = random_matrix(n, rng), k = random_matrix(n, rng);
        const Quaternion s = Quaternion(3.0 + operator_norm(a) + operator_norm(k));
        const double scale = std::pow(1 + operator_norm(a) + operator_norm(k) + s.norm(), 2);
        CHECK(weyl_factorization_residual(a, k, s) < 1e-10 * scale);
        CHECK(weyl_factorization_residual(a, QMatrix(n), s) < 1e-12 * scale);
    }
}
