#include <doctest.h>

#include <cmath>

#include "qspectral/error.hpp"
#include "qspectral/functional_calculus.hpp"
#include "qspectral/random.hpp"
#include "support.hpp"

using namespace qspectral;
using qtest::max_entry_diff;

namespace {

const Quaternion e1 = Quaternion::e1();

double default_radius(const QMatrix& t) { return 2.0 * operator_norm(t) + 1.0; }

SliceSeries random_polynomial(Rng& rng, Side side, std::size_t degree, bool intrinsic) {
    std::vector<Quaternion> c;
    for (std::size_t k = 0; k <= degree; ++k) c.push_back(intrinsic ? Quaternion(random_quaternion(rng).x0) : random_quaternion(rng));
    return SliceSeries(side, c);
}

// Oracle: sum of T^n a_n (or a_n T^n) using naive powers.
QMatrix naive_series(const QMatrix& t, const SliceSeries& f) {
    QMatrix sum(t.size());
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        const QMatrix p = qtest::power(t, static_cast<int>(k));
        sum += f.side() == Side::Left ? p * f.coefficients()[k] : f.coefficients()[k] * p;
    }
    return sum;
}

}  // namespace

TEST_CASE("functional calculus examples") {
    Rng rng(51);
    const QMatrix t = random_matrix(3, rng);
    const auto contour = SliceContour::circle(ImaginaryUnit::e1(), default_radius(t));
    CHECK(max_entry_diff(functional_calculus(t, SliceSeries::constant(1.0), contour), QMatrix::identity(3)) < 1e-12);

    const QMatrix d = QMatrix::diagonal({1.0, 2.0});
    const QMatrix id = functional_calculus(d, SliceSeries::identity(), SliceContour::circle(ImaginaryUnit::e1(), 5.0));
    CHECK(max_entry_diff(id, d) < 1e-12);

    const SliceSeries square(Side::Left, {0.0, 0.0, 1.0});
    const QMatrix te = QMatrix::diagonal({e1});
    CHECK(max_entry_diff(functional_calculus(te, square, SliceContour::circle(ImaginaryUnit::e2(), 3.0)), QMatrix::scalar(1, -1.0)) < 1e-12);
}

TEST_CASE("functional calculus matches polynomial evaluation on both sides") {
    Rng rng(52);
    for (int i = 0; i < 12; ++i) {
        const QMatrix t = random_matrix(1 + i % 5, rng);
        const Side side = i % 2 ? Side::Left : Side::Right;
        const SliceSeries f = random_polynomial(rng, side, 1 + i % 6, false);
        const QMatrix expected = naive_series(t, f);
        const QMatrix got = functional_calculus(t, f, SliceContour::circle(random_unit(rng), default_radius(t)));
        const double scale = std::max(1.0, operator_norm(expected));
        CHECK(operator_norm(got - expected) < 1e-8 * scale);
        CHECK(operator_norm(apply_series_directly(t, f) - expected) < 1e-12 * scale);
    }
}

TEST_CASE("quadrature converges when doubling the node count") {
    Rng rng(53);
    for (int i = 0; i < 6; ++i) {
        const QMatrix t = random_matrix(1 + i % 4, rng);
        const SliceSeries f = random_polynomial(rng, Side::Left, 4, false);
        const double r = default_radius(t);
        const QMatrix coarse = functional_calculus(t, f, SliceContour::circle(ImaginaryUnit::e1(), r, 256));
        const QMatrix fine = functional_calculus(t, f, SliceContour::circle(ImaginaryUnit::e1(), r, 512));
        CHECK(operator_norm(coarse - fine) < 1e-9 * operator_norm(fine));
    }
}

TEST_CASE("intrinsic functions do not depend on the slice") {
    Rng rng(54);
    const ImaginaryUnit units[] = {ImaginaryUnit::e1(), ImaginaryUnit::e2(), ImaginaryUnit::normalized(1, 1, 1)};
    for (int i = 0; i < 8; ++i) {
        const QMatrix t = random_matrix(1 + i % 5, rng);
        const SliceSeries f = random_polynomial(rng, Side::Left, 5, true);
        const QMatrix base = functional_calculus(t, f, SliceContour::circle(units[0], default_radius(t)));
        const double scale = std::max(1.0, operator_norm(base));
        for (const auto& u : units)
            CHECK(operator_norm(functional_calculus(t, f, SliceContour::circle(u, default_radius(t))) - base) < 1e-8 * scale);
    }
}

TEST_CASE("homomorphism on intrinsic functions") {
    Rng rng(55);
    for (int i = 0; i < 8; ++i) {
        const QMatrix t = random_matrix(1 + i % 4, rng);
        const SliceSeries f = random_polynomial(rng, Side::Left, 3, true), g = random_polynomial(rng, Side::Left, 2, true);
        const auto c = SliceContour::circle(ImaginaryUnit::e3(), default_radius(t));
        const QMatrix fg = functional_calculus(t, star_multiply(f, g), c);
        const QMatrix prod = functional_calculus(t, f, c) * functional_calculus(t, g, c);
        CHECK(operator_norm(fg - prod) < 1e-8 * std::max(1.0, operator_norm(fg)));
    }
}

TEST_CASE("threaded quadrature is bit-identical to serial") {
    Rng rng(56);
    const QMatrix t = random_matrix(4, rng);
    const SliceSeries f = random_polynomial(rng, Side::Right, 3, false);
    const auto c = SliceContour::circle(ImaginaryUnit::e1(), default_radius(t));
    CHECK(functional_calculus(t, f, c, 1) == functional_calculus(t, f, c, 4));
}

TEST_CASE("admissibility") {
    const QMatrix t = QMatrix::diagonal({1.0, 5.0});
    const SliceSeries f = SliceSeries::identity();
    CHECK_THROWS_AS(functional_calculus(t, f, SliceContour::circle(ImaginaryUnit::e1(), 3.0)), Error);
    CHECK_THROWS_AS(functional_calculus(t, f, SliceContour::circle(ImaginaryUnit::e1(), 5.05)), Error);
    CHECK_THROWS_AS(functional_calculus(t, SliceSeries(Side::Left, {0.0, 1.0}, 8.0), SliceContour::circle(ImaginaryUnit::e1(), 11.0)), Error);
    // A circle off the real axis would enclose u + Jv but not u - Jv.
    const QMatrix te = QMatrix::diagonal({Quaternion(0, 2, 0, 0)});
    const SliceContour lopsided(ImaginaryUnit::e1(), {Circle{{0.0, 2.0}, 1.0}});
    CHECK_THROWS_AS(riesz_projector(te, lopsided), Error);
    CHECK_THROWS_AS(SliceContour::circle(ImaginaryUnit::e1(), 1.0, 4), Error);
    CHECK_THROWS_AS(SliceContour::circle(ImaginaryUnit::e1(), -1.0), Error);
}

TEST_CASE("Riesz projector examples") {
    const QMatrix t = QMatrix::diagonal({1.0, 5.0});
    const QMatrix all = riesz_projector(t, SliceContour::circle(ImaginaryUnit::e1(), 8.0));
    CHECK(max_entry_diff(all, QMatrix::identity(2)) < 1e-12);
    const QMatrix none = riesz_projector(t, SliceContour(ImaginaryUnit::e1(), {Circle{{3.0, 0.0}, 1.0}}));
    CHECK(max_entry_diff(none, QMatrix(2)) < 1e-12);
    const QMatrix p = riesz_projector(t, SliceContour(ImaginaryUnit::e1(), {Circle{{1.0, 0.0}, 1.0}}));
    CHECK(max_entry_diff(p, QMatrix::diagonal({1.0, 0.0})) < 1e-12);
    CHECK(projector_rank(p) == 1);
}

TEST_CASE("Riesz projector on a non-real cluster") {
    Rng rng(57);
    const std::vector<SpherePoint> spheres = {{0.0, 1.0}, {0.1, 1.1}, {4.0, 0.5}, {4.2, 0.0}, {3.9, 0.3}};
    const QMatrix t = random_normal_with_spectrum(spheres, rng);
    // Circle centred on the real axis enclosing both u +- Jv of the first two spheres.
    const QMatrix p = riesz_projector(t, SliceContour(ImaginaryUnit::e2(), {Circle{{0.0, 0.0}, 2.0}}));
    const double scale = std::max(1.0, operator_norm(t));
    CHECK(operator_norm(p * p - p) < 1e-8 * scale);
    CHECK(operator_norm(commutator(p, t)) < 1e-8 * scale);
    CHECK(projector_rank(p) == 2);
}

TEST_CASE("spectral mapping examples") {
    const QMatrix d = QMatrix::diagonal({1.0, 2.0});
    CHECK(spectral_mapping_check(d, SliceSeries::identity()) < 1e-10);
    const SliceSeries square(Side::Left, {0.0, 0.0, 1.0});
    CHECK(spectral_mapping_check(d, square) < 1e-10);
    CHECK(spectral_mapping_check(QMatrix::diagonal({e1}), square) < 1e-10);
    CHECK_THROWS_AS(spectral_mapping_check(d, SliceSeries(Side::Left, {0.0, e1})), Error);
    CHECK_THROWS_AS(spectral_mapping_check(QMatrix{{0.0, 1.0}, {0.0, 0.0}}, square), Error);
}

TEST_CASE("spectral mapping on random normal operators") {
    Rng rng(58);
    for (int i = 0; i < 10; ++i) {
        const QMatrix t = random_normal(1 + i % 6, rng);
        const SliceSeries f = random_polynomial(rng, Side::Left, 1 + i % 4, true);
        const double scale = std::max(1.0, std::pow(operator_norm(t), static_cast<double>(f.degree())));
        CHECK(spectral_mapping_check(t, f) < 1e-7 * scale);
    }
}
