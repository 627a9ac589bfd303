#include "qspectral/quaternion.hpp"

#include "qspectral/error.hpp"

namespace qspectral {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& q) : q_(q) {
    if (std::abs(q.x0) > kUnitTolerance || std::abs(q.norm() - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::BadArgument, "imaginary unit must satisfy Re J = 0 and |J| = 1");
    }
    q_.x0 = 0.0;
}

ImaginaryUnit ImaginaryUnit::normalized(double x, double y, double z) {
    const double len = std::hypot(x, std::hypot(y, z));
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw Error(ErrorKind::BadArgument, "cannot normalize a zero or non-finite direction");
    }
    return ImaginaryUnit(Quaternion(0.0, x / len, y / len, z / len));
}

SliceForm slice_decompose(const Quaternion& q) {
    const double v = q.imag_norm();
    if (v > 0.0) {
        Quaternion j = q.imag() / v;
        // |j| can be off by an ulp or two; renormalize before validation.
        j = j / j.norm();
        return {q.x0, v, ImaginaryUnit(j)};
    }
    return {q.x0, 0.0, std::nullopt};
}

double sphere_distance(const SpherePoint& a, const SpherePoint& b) {
    return std::hypot(a.u - b.u, a.v - b.v);
}

}  // namespace qspectral
