#pragma once

// Experiments on normal-plus-Schatten perturbations: growth of the pseudo-resolvent
// and the S-resolvent along segments leaving an arc of spectrum, inclusion of the
// spectrum of restrictions to invariant subspaces, and Weyl-type displacement reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qspectral/qmatrix.hpp"
#include "qspectral/random.hpp"
#include "qspectral/spectrum.hpp"

namespace qspectral {

enum class ArcKind {
    HalfCircle,  // (cos pi t, sin pi t), t in [0, 1]
    Segment,     // (2t - 1, 0), t in [0, 1]
};

ArcKind parse_arc(const std::string& name);
std::string to_string(ArcKind kind);

struct Arc {
    ArcKind kind = ArcKind::HalfCircle;

    SpherePoint point(double t) const;
    /// Unit tangent (du, dv) at t.
    std::pair<double, double> tangent(double t) const;
};

struct ArcSpectrumEnsemble {
    Arc arc;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    /// n equally spaced parameters, endpoints included.
    std::vector<SpherePoint> spheres() const;
    /// U diag(u + e1 v) U* with U a random unitary drawn from the seed.
    QMatrix generate() const;
};

/// Random matrix scaled to the given Schatten-k norm.
QMatrix random_schatten_perturbation(std::size_t n, double k, double target_norm, Rng& rng);

struct SegmentProbe {
    SpherePoint s0;
    double du = 1.0;
    double dv = 0.0;
    std::vector<double> distances;

    /// s0 + d (du, dv) embedded in the slice C_{e1}.
    Quaternion at(double d) const;

    /// Probe leaving arc(t0) along `direction`; the angle to the tangent must be at least 10 degrees.
    /// Distances d_i = d0 2^{-i}, i = 0..count-1.
    static SegmentProbe leaving(const Arc& arc, double t0, std::pair<double, double> direction,
                                double d0 = 0.5, int count = 13);
    /// Probe leaving arc(t0) along the normal pointing away from the centre of curvature (or +v for a segment).
    static SegmentProbe normal_to(const Arc& arc, double t0, double d0 = 0.5, int count = 13);
};

struct GrowthRow {
    double d = 0.0;
    double norm_q = 0.0;
    double norm_sl = 0.0;
    double fitted_k = 0.0;  // log||Q|| d^(2k+2) at this sample
};

struct GrowthReport {
    int k = 0;
    std::vector<GrowthRow> rows;
    double fitted_k = 0.0;            // max over rows
    double power_slope = 0.0;         // least squares slope of log||Q|| against log d
    double log_growth_exponent = 0.0; // least squares slope of log(log||Q||) against log d, rows with ||Q|| > 1
    bool stopped_early = false;       // pencil condition number exceeded 1e14
    bool bound_holds = false;         // log_growth_exponent >= -(2k+2) - 0.5

    void write_csv(std::ostream& os) const;
};

/// ||Q_s(A+B)|| along the probe. Throws ProbeHitsSpectrum when a sample's pencil is singular.
GrowthReport growth_experiment(const QMatrix& a, const QMatrix& b, int k, const SegmentProbe& probe);

struct HypothesisReport {
    std::vector<GrowthRow> rows;        // fitted_k column unused
    std::vector<double> fitted_k;       // index j -> K for exponent j + 1
    int smallest_k = 0;                 // 0 when no exponent up to max_k qualifies
};

/// For exponents 1..max_k, K_j = max_d log+||S_L^{-1}(s(d),T)|| d^j. Exponent j is accepted when
/// that maximum is not attained only at the smallest sampled distance.
HypothesisReport growth_hypothesis_check(const QMatrix& t, int max_k, const SegmentProbe& probe);

struct RestrictionReport {
    SpectrumResult restricted;
    SpectrumResult full;
    double directed = 0.0;
    bool holds = false;
};

/// T restricted to the span of the first m basis vectors, which must be invariant.
RestrictionReport restriction_spectrum_check(const QMatrix& t, std::size_t m, double slack = 1e-7);

struct WeylReport {
    SpectrumResult unperturbed;
    SpectrumResult perturbed;
    std::vector<double> displacement;   // per sphere of sigma_S(A + K), distance to sigma_S(A)
    double max_factorization_residual = 0.0;
    double residual_scale = 0.0;
    bool holds = false;                 // residual < 1e-10 scale at every sample
};

WeylReport weyl_report(const QMatrix& a, const QMatrix& k, std::uint64_t seed, int samples = 20);

}  // namespace qspectral
