#pragma once

// S-spectrum of a quaternionic matrix, the quadratic pencil
// T^2 - 2 Re(s) T + |s|^2 I, its inverse Q_s(T) and the left/right S-resolvents.
//
// At finite dimension the point, approximate point and full S-spectrum all
// coincide with the set of right eigenvalues, so one routine serves all of them.

#include <vector>

#include "qspectral/qmatrix.hpp"

namespace qspectral {

struct SpectrumSphere {
    SpherePoint point;
    int multiplicity = 0;
};

/// Spheres sorted by (u, v); multiplicities sum to the dimension.
struct SpectrumResult {
    std::vector<SpectrumSphere> spheres;

    /// min over spheres of sphere_distance; +inf for an empty spectrum.
    double distance_to(const SpherePoint& p) const;
    double max_modulus() const;
};

/// Symmetric Hausdorff distance between two sphere sets (multiplicities ignored).
double hausdorff_distance(const SpectrumResult& a, const SpectrumResult& b);
/// sup over spheres of a of the distance to b.
double directed_distance(const SpectrumResult& a, const SpectrumResult& b);

/// Eigenvalues of chi(T) mapped to (Re, |Im|) and merged within 1e-8 (1 + ||T||).
/// Multiplicity counts eigenvalues of chi(T) per sphere, halved.
SpectrumResult s_spectrum(const QMatrix& t);

/// Holes of a finite point set are empty, so the full S-spectrum is the S-spectrum itself.
SpectrumResult full_s_spectrum(const QMatrix& t);

QMatrix quadratic_pencil(const QMatrix& t, const Quaternion& s);

/// Smallest singular value of the pencil compared against 1e-10 (1 + ||T||)^2.
bool in_resolvent_set(const QMatrix& t, const Quaternion& s);

/// A unit x with ||(T^2 - 2Re(s)T + |s|^2) x|| minimal, i.e. the smallest right singular vector.
QVector approximate_eigenvector(const QMatrix& t, const Quaternion& s);

struct PseudoResolvent {
    Quaternion s;
    QMatrix value;
};

/// Q_s(T); throws OnSpectrum when [s] meets the S-spectrum.
PseudoResolvent pseudo_resolvent(const QMatrix& t, const Quaternion& s);

/// S_L^{-1}(s,T) = -Q_s(T)(T - conj(s) I)
QMatrix s_resolvent_left(const QMatrix& t, const Quaternion& s);
/// S_R^{-1}(s,T) = -(T - conj(s) I) Q_s(T)
QMatrix s_resolvent_right(const QMatrix& t, const Quaternion& s);

/// Same as above with Q_s(T) already available.
QMatrix s_resolvent_left(const QMatrix& t, const QMatrix& q, const Quaternion& s);
QMatrix s_resolvent_right(const QMatrix& t, const QMatrix& q, const Quaternion& s);

struct ResolventEquationResidual {
    double first_form = 0.0;   // right-hand side with (p^2 - 2Re(s)p + |s|^2)^{-1} on the right
    double second_form = 0.0;  // right-hand side with (s^2 - 2Re(p)s + |p|^2)^{-1} on the left
    double between_forms = 0.0;
};

/// Operator-norm residuals of both forms of the S-resolvent equation for
/// S_R^{-1}(s,T) S_L^{-1}(p,T). Throws SameSphere when [s] = [p].
ResolventEquationResidual verify_s_resolvent_equation(const QMatrix& t, const Quaternion& s, const Quaternion& p);

struct SpectralRadius {
    double exact = 0.0;            // max |s| over the S-spectrum
    std::vector<double> sequence;  // ||T^(2^k)||^(1/2^k), k = 0.. while 2^k <= max_power
};

SpectralRadius spectral_radius(const QMatrix& t, int max_power = 64);

struct ResolventBound {
    double lhs = 0.0;  // ||Q_s(T)||
    double rhs = 0.0;  // 1 / dist(sigma_S(T), [s])^2
};

/// For normal T: ||Q_s(T)|| <= 1 / dist(sigma_S(T), [s])^2.
ResolventBound normal_resolvent_bound(const QMatrix& t, const Quaternion& s);

/// || P_s(A+K) - P_s(A) (I + Q_s(A)(K^2 + AK + KA - 2 s0 K)) || where P_s is the quadratic pencil.
double weyl_factorization_residual(const QMatrix& a, const QMatrix& k, const Quaternion& s);

}  // namespace qspectral
