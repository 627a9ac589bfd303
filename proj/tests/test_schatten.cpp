#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qspectral/error.hpp"
#include "qspectral/random.hpp"
#include "qspectral/schatten.hpp"
#include "support.hpp"

using namespace qspectral;
using qtest::max_entry_diff;

namespace {

const Quaternion e1 = Quaternion::e1();

// Oracle: p-norm straight from the real-form singular values.
double oracle_schatten(const QMatrix& t, double p) {
    const auto l = qtest::oracle_singular_values(t);
    if (std::isinf(p)) return l.front();
    double acc = 0.0;
    for (double x : l) acc += std::pow(x, p);
    return std::pow(acc, 1.0 / p);
}

}  // namespace

TEST_CASE("singular value examples") {
    const auto a = singular_values(QMatrix::diagonal({3.0, 1.0}));
    REQUIRE(a.lambdas.size() == 2);
    CHECK(a.lambdas[0] == doctest::Approx(3.0));
    CHECK(a.lambdas[1] == doctest::Approx(1.0));
    const auto b = singular_values(QMatrix::diagonal({2.0 * e1}));
    CHECK(b.lambdas[0] == doctest::Approx(2.0));
    const auto z = singular_values(QMatrix(3));
    for (double l : z.lambdas) CHECK(l == 0.0);
}

TEST_CASE("singular values agree with the oracle and reconstruct") {
    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 1 + i % 6;
        QMatrix t = random_matrix(n, rng);
        if (i % 5 == 0) t.set_column(0, QVector(n));  // rank deficient
        const auto svd = singular_values(t);
        const auto oracle = qtest::oracle_singular_values(t);
        CHECK(std::is_sorted(svd.lambdas.rbegin(), svd.lambdas.rend()));
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(svd.lambdas[k] - oracle[k]) < 1e-12 * (1 + oracle[0]));
        CHECK(operator_norm(svd.reconstruct() - t) <= 1e-9 * operator_norm(t));
        CHECK(max_entry_diff(adjoint(svd.left) * svd.left, QMatrix::identity(n)) < 1e-9);
        CHECK(max_entry_diff(adjoint(svd.right) * svd.right, QMatrix::identity(n)) < 1e-9);
    }
}

TEST_CASE("singular values are unitarily invariant") {
    Rng rng(62);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + i % 6;
        const QMatrix t = random_matrix(n, rng), u = random_unitary(n, rng), v = random_unitary(n, rng);
        const auto a = singular_value_list(t), b = singular_value_list(u * t * v);
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
    }
}

TEST_CASE("Schatten norm examples") {
    const QMatrix d = QMatrix::diagonal({1.0, 2.0, 3.0});
    CHECK(schatten_norm(d, 1.0) == 6.0);
    CHECK(schatten_norm(d, 2.0) == doctest::Approx(std::sqrt(14.0)).epsilon(1e-15));
    Rng rng(63);
    const QMatrix t = random_matrix(4, rng);
    CHECK(schatten_norm(t, kInfinity) == doctest::Approx(operator_norm(t)).epsilon(1e-14));
    CHECK_THROWS_AS(schatten_norm(t, 0.5), Error);
    CHECK_THROWS_AS(schatten_norm(t, std::nan("")), Error);
    CHECK(schatten_norm(QMatrix(3), 2.0) == 0.0);
    // Large exponent does not overflow.
    CHECK(schatten_norm(QMatrix::diagonal({1e200, 1e200}), 4.0) == doctest::Approx(1e200 * std::pow(2.0, 0.25)));
}

TEST_CASE("Schatten norms match the oracle and are norms") {
    Rng rng(64);
    const double ps[] = {1.0, 1.5, 2.0, 3.0, 7.0, kInfinity};
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 1 + i % 6;
        const QMatrix t = random_matrix(n, rng), s = random_matrix(n, rng);
        for (double p : ps) {
            CHECK(schatten_norm(t, p) == doctest::Approx(oracle_schatten(t, p)).epsilon(1e-11));
            CHECK(schatten_norm(t + s, p) <= schatten_norm(t, p) + schatten_norm(s, p) + 1e-12);
            CHECK(schatten_norm(t * 2.5, p) == doctest::Approx(2.5 * schatten_norm(t, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("ideal inequality examples") {
    Rng rng(65);
    const QMatrix t = random_matrix(4, rng);
    const auto r = check_ideal_inequalities(t, QMatrix::identity(4), 2.0);
    CHECK(r.ok());
    CHECK(r.left_ideal_lhs == doctest::Approx(r.ideal_rhs).epsilon(1e-12));
    CHECK(r.right_ideal_lhs == doctest::Approx(r.ideal_rhs).epsilon(1e-12));
    const auto b = check_ideal_inequalities(QMatrix::diagonal({1.0}), QMatrix::diagonal({1.0}), 1.0);
    CHECK(b.ok());
    CHECK(b.sum_checks == 1);
    CHECK(b.product_checks == 1);
    for (double p : {1.0, 2.0, 3.0}) {
        for (int i = 0; i < 20; ++i) CHECK(check_ideal_inequalities(random_matrix(4, rng), random_matrix(4, rng), p).ok());
    }
}

TEST_CASE("commutation predicate") {
    const QMatrix j = QMatrix::scalar(2, e1);
    CHECK(commutes_with(QMatrix::diagonal({1.0, 2.0}), j));
    CHECK_FALSE(commutes_with(QMatrix::diagonal({Quaternion::e2(), 1.0}), j));
}

TEST_CASE("delta_k closed forms") {
    CHECK(delta_k(QMatrix(3), 2, ImaginaryUnit::e1()).value == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(delta_k(QMatrix::diagonal({1.0}), 1, ImaginaryUnit::e1()).value - 2.0) < 1e-12);
    CHECK(std::abs(delta_k(QMatrix::diagonal({1.0}), 2, ImaginaryUnit::e1()).value - 2.0 / std::numbers::e) < 1e-12);
    CHECK(std::abs(delta_k(QMatrix::diagonal({1.0, 2.0, 3.0}), 1, ImaginaryUnit::e1()).value - 24.0) < 1e-12);
    CHECK_THROWS_AS(delta_k(QMatrix(1), 0, ImaginaryUnit::e1()), Error);
}

TEST_CASE("delta_k against an independent product") {
    // diag(s) with s = u + e1 v: factor (1+s) exp(sum_{j<k} (-1)^j s^j / j), conjugates folded to v >= 0.
    Rng rng(66);
    for (int i = 0; i < 20; ++i) {
        const int k = 1 + i % 4;
        std::vector<Quaternion> d;
        std::complex<double> expected = 1.0;
        for (int m = 0; m < 3; ++m) {
            const std::complex<double> s(0.3 * random_quaternion(rng).x0, 0.3 * std::abs(random_quaternion(rng).x1));
            d.push_back(ImaginaryUnit::e1().point(m == 1 ? std::conj(s) : s));
            std::complex<double> ex = 0.0;
            for (int j = 1; j < k; ++j) ex += std::pow(-1.0, j) * std::pow(s, j) / static_cast<double>(j);
            expected *= (1.0 + s) * std::exp(ex);
        }
        const auto got = delta_k(QMatrix::diagonal(d), k, ImaginaryUnit::e2());
        CHECK(std::abs(got.value - expected) < 1e-12);
        CHECK(got.as_quaternion().x1 == 0.0);
        CHECK(got.as_quaternion().x3 == 0.0);
    }
}

TEST_CASE("delta_k is slice independent and continuous") {
    Rng rng(67);
    for (int i = 0; i < 10; ++i) {
        const QMatrix t = random_matrix(1 + i % 5, rng) * 0.3;
        const int k = 1 + i % 3;
        const auto a = delta_k(t, k, ImaginaryUnit::e1()), b = delta_k(t, k, ImaginaryUnit::e2());
        CHECK(std::abs(std::abs(a.value) - std::abs(b.value)) < 1e-10);
        CHECK(std::abs(a.value.real() - b.value.real()) < 1e-10);

        QMatrix e = random_matrix(t.size(), rng);
        e *= 1.0 / schatten_norm(e, k);
        double prev = std::numeric_limits<double>::infinity();
        for (double eps : {1e-2, 1e-4, 1e-6}) {
            const double change = std::abs(delta_k(t + e * eps, k, ImaginaryUnit::e1()).value - a.value);
            CHECK(change < prev);
            prev = change;
        }
    }
}
