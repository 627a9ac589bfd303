#include "qspectral/slice_function.hpp"

#include <algorithm>

#include "qspectral/error.hpp"

namespace qspectral {

SliceSeries::SliceSeries(Side side, std::vector<Quaternion> coefficients, double radius)
    : side_(side), coefficients_(std::move(coefficients)), radius_(radius) {
    if (!(radius_ > 0.0)) throw Error(ErrorKind::BadArgument, "series radius must be positive");
}

bool SliceSeries::is_intrinsic() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Quaternion& a) { return a.is_real(); });
}

Quaternion SliceSeries::operator()(const Quaternion& q) const {
    if (!(q.norm() < radius_)) throw Error(ErrorKind::OutOfBall, "evaluation point outside the convergence ball");
    if (coefficients_.empty()) return {};
    Quaternion acc = coefficients_.back();
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it)
        acc = side_ == Side::Left ? q * acc + *it : acc * q + *it;
    return acc;
}

Quaternion evaluate(const SliceSeries& f, const Quaternion& q) { return f(q); }

SliceSeries star_multiply(const SliceSeries& f, const SliceSeries& g) {
    if (f.side() != g.side()) throw Error(ErrorKind::SideMismatch, "star product of a left and a right series");
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    if (a.empty() || b.empty()) return SliceSeries(f.side(), {}, std::min(f.radius(), g.radius()));
    std::vector<Quaternion> c(a.size() + b.size() - 1);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t m = 0; m < b.size(); ++m) c[r + m] += a[r] * b[m];
    return SliceSeries(f.side(), std::move(c), std::min(f.radius(), g.radius()));
}

SliceComponents slice_components(const SliceFunction& f, const Quaternion& q, Side side) {
    const SliceForm form = slice_decompose(q);
    const ImaginaryUnit unit = form.unit.value_or(ImaginaryUnit::e1());
    const Quaternion j = unit.value();
    const Quaternion plus = f(unit.point(form.u, form.v));
    if (form.v == 0.0) return {plus, {}};
    const Quaternion minus = f(unit.point(form.u, -form.v));
    const Quaternion half_diff = (plus - minus) * 0.5;
    // left: f = alpha + J beta, so beta = -J (f+ - f-)/2; right: beta = -(f+ - f-) J / 2
    const Quaternion beta = side == Side::Left ? -(j * half_diff) : -(half_diff * j);
    return {(plus + minus) * 0.5, beta};
}

Quaternion star_product_at(const SliceFunction& f, const SliceFunction& g, const Quaternion& q, Side side) {
    const SliceForm form = slice_decompose(q);
    const Quaternion j = form.unit.value_or(ImaginaryUnit::e1()).value();
    const auto [alpha, beta] = slice_components(f, q, side);
    const auto [gamma, delta] = slice_components(g, q, side);
    const Quaternion even = alpha * gamma - beta * delta;
    const Quaternion odd = alpha * delta + beta * gamma;
    return side == Side::Left ? even + j * odd : even + odd * j;
}

namespace {

// q^2 - 2 Re(s) q + |s|^2
Quaternion characteristic(const Quaternion& q, const Quaternion& s) {
    return q * q - 2.0 * s.real() * q + s.norm2();
}

}  // namespace

Quaternion LinearFactorInverse::operator()(const Quaternion& q) const {
    const double scale = 1.0 + s_.norm();
    if (sphere_distance(SpherePoint::of(q), SpherePoint::of(s_)) <= 1e-12 * scale)
        throw Error(ErrorKind::OnSphere, "q lies on the sphere [s]");
    const Quaternion c_inv = characteristic(q, s_).inverse();
    const Quaternion lin = q - s_.conj();
    return side_ == Side::Left ? c_inv * lin : lin * c_inv;
}

LinearFactorInverse linear_factor_inverse(const Quaternion& s, Side side) { return {s, side}; }

double verify_variable_exchange(const Quaternion& q, const Quaternion& s) {
    // f(q) = q - s inverted in q, g(s) = s - q inverted in s (roles of the variables exchanged).
    const Quaternion f_left = linear_factor_inverse(s, Side::Left)(q);
    const Quaternion f_right = linear_factor_inverse(s, Side::Right)(q);
    const Quaternion g_right = linear_factor_inverse(q, Side::Right)(s);
    const Quaternion g_left = linear_factor_inverse(q, Side::Left)(s);
    const double first = (f_left + g_right).norm() / (1.0 + f_left.norm());
    const double second = (f_right + g_left).norm() / (1.0 + f_right.norm());
    return std::max(first, second);
}

}  // namespace qspectral
