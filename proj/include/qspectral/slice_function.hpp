#pragma once

// Slice hyperholomorphic functions on balls centred at the origin, represented
// by truncated power series: left series sum q^n a_n, right series sum a_n q^n.

#include <functional>
#include <limits>
#include <vector>

#include "qspectral/quaternion.hpp"

namespace qspectral {

enum class Side { Left, Right };

class SliceSeries {
public:
    SliceSeries() = default;
    SliceSeries(Side side, std::vector<Quaternion> coefficients,
                double radius = std::numeric_limits<double>::infinity());

    static SliceSeries identity(Side side = Side::Left) { return SliceSeries(side, {0.0, 1.0}); }
    static SliceSeries constant(const Quaternion& c, Side side = Side::Left) { return SliceSeries(side, {c}); }

    Side side() const { return side_; }
    double radius() const { return radius_; }
    const std::vector<Quaternion>& coefficients() const { return coefficients_; }
    std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }

    /// All coefficients real; such a series is both left and right slice hyperholomorphic.
    bool is_intrinsic() const;

    /// Same coefficients read on the other side; only meaningful for intrinsic series.
    SliceSeries with_side(Side side) const { return SliceSeries(side, coefficients_, radius_); }

    /// Horner evaluation; throws OutOfBall when |q| >= radius.
    Quaternion operator()(const Quaternion& q) const;

private:
    Side side_ = Side::Left;
    std::vector<Quaternion> coefficients_;
    double radius_ = std::numeric_limits<double>::infinity();
};

Quaternion evaluate(const SliceSeries& f, const Quaternion& q);

/// Coefficient convolution c_n = sum_r a_r b_{n-r}; throws SideMismatch.
SliceSeries star_multiply(const SliceSeries& f, const SliceSeries& g);

using SliceFunction = std::function<Quaternion(const Quaternion&)>;

/// Slice components at q = u + J v: f(u + J v) = alpha + J beta (left) or alpha + beta J (right).
/// For real q the unit J is taken to be e1.
struct SliceComponents {
    Quaternion alpha;
    Quaternion beta;
};
SliceComponents slice_components(const SliceFunction& f, const Quaternion& q, Side side);

/// Pointwise star product through the components:
/// (alpha gamma - beta delta) + J (alpha delta + beta gamma), J on the right for Side::Right.
Quaternion star_product_at(const SliceFunction& f, const SliceFunction& g, const Quaternion& q, Side side);

/// The star inverse of q -> q - s:
/// left (q^2 - 2Re(s) q + |s|^2)^{-1} (q - conj s), right (q - conj s)(q^2 - 2Re(s) q + |s|^2)^{-1}.
class LinearFactorInverse {
public:
    LinearFactorInverse(const Quaternion& s, Side side) : s_(s), side_(side) {}

    const Quaternion& s() const { return s_; }
    Side side() const { return side_; }

    /// Throws OnSphere when q lies in [s].
    Quaternion operator()(const Quaternion& q) const;

private:
    Quaternion s_;
    Side side_;
};

LinearFactorInverse linear_factor_inverse(const Quaternion& s, Side side);

/// Largest relative residual of the two identities exchanging q and s between the
/// star inverses in q of q - s and those in s of s - q.
double verify_variable_exchange(const Quaternion& q, const Quaternion& s);

}  // namespace qspectral
