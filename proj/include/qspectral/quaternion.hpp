#pragma once

// Quaternion scalars x0 + x1 e1 + x2 e2 + x3 e3 with e1 e2 = e3, the sphere
// of imaginary units, slice decomposition and axially symmetric classes.

#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

namespace qspectral {

struct Quaternion {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a) : x0(a) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}

    static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
    static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
    static constexpr Quaternion e3() { return {0, 0, 0, 1}; }

    constexpr double real() const { return x0; }
    constexpr Quaternion imag() const { return {0, x1, x2, x3}; }
    constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
    constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::hypot(std::hypot(x0, x1), std::hypot(x2, x3)); }
    double imag_norm() const { return std::hypot(x1, std::hypot(x2, x3)); }
    bool is_real() const { return x1 == 0.0 && x2 == 0.0 && x3 == 0.0; }

    Quaternion inverse() const {
        const double n2 = norm2();
        return {x0 / n2, -x1 / n2, -x2 / n2, -x3 / n2};
    }

    constexpr Quaternion& operator+=(const Quaternion& q) {
        x0 += q.x0; x1 += q.x1; x2 += q.x2; x3 += q.x3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& q) {
        x0 -= q.x0; x1 -= q.x1; x2 -= q.x2; x3 -= q.x3;
        return *this;
    }
    constexpr Quaternion& operator*=(double a) {
        x0 *= a; x1 *= a; x2 *= a; x3 *= a;
        return *this;
    }
    constexpr Quaternion& operator*=(const Quaternion& q);

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

constexpr Quaternion& Quaternion::operator*=(const Quaternion& q) { return *this = *this * q; }

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

inline double abs(const Quaternion& q) { return q.norm(); }
constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Absolute tolerance for the "purely imaginary" and "unit" checks.
inline constexpr double kUnitTolerance = 1e-12;

/// A purely imaginary unit quaternion J, so that J^2 = -1.
class ImaginaryUnit {
public:
    /// Throws BadArgument unless q is imaginary with |q| = 1 within kUnitTolerance.
    explicit ImaginaryUnit(const Quaternion& q);

    /// Normalizes (x, y, z) to x e1 + y e2 + z e3; throws BadArgument on the zero vector.
    static ImaginaryUnit normalized(double x, double y, double z);

    static ImaginaryUnit e1() { return ImaginaryUnit(Quaternion::e1()); }
    static ImaginaryUnit e2() { return ImaginaryUnit(Quaternion::e2()); }
    static ImaginaryUnit e3() { return ImaginaryUnit(Quaternion::e3()); }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }  // NOLINT

    /// u + J v
    Quaternion point(double u, double v) const { return {u, v * q_.x1, v * q_.x2, v * q_.x3}; }
    Quaternion point(std::complex<double> z) const { return point(z.real(), z.imag()); }

    /// Coordinates of q in the slice C_J: (Re q, <Im q, J>). Exact only for q in C_J.
    std::complex<double> coordinates(const Quaternion& q) const {
        return {q.x0, q.x1 * q_.x1 + q.x2 * q_.x2 + q.x3 * q_.x3};
    }

private:
    Quaternion q_;
};

/// Canonical representative (u, v >= 0) of the sphere [u + J v] = {u + J v : J in S}.
struct SpherePoint {
    double u = 0.0;
    double v = 0.0;

    constexpr SpherePoint() = default;
    SpherePoint(double u_, double v_) : u(u_), v(std::abs(v_)) {}

    static SpherePoint of(const Quaternion& q) { return {q.x0, q.imag_norm()}; }

    Quaternion representative(const ImaginaryUnit& unit) const { return unit.point(u, v); }
    double modulus() const { return std::hypot(u, v); }
};

struct SliceForm {
    double u;
    double v;
    std::optional<ImaginaryUnit> unit;  // empty for real q
};

/// q = u + J v with v = |Im q|; no unit is chosen when q is real.
SliceForm slice_decompose(const Quaternion& q);

/// inf over s in [a], t in [b] of |s - t|.
double sphere_distance(const SpherePoint& a, const SpherePoint& b);

}  // namespace qspectral
