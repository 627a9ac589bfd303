#include "qspectral/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>

#include "qspectral/error.hpp"
#include "qspectral/schatten.hpp"

namespace qspectral {

ArcKind parse_arc(const std::string& name) {
    if (name == "halfcircle") return ArcKind::HalfCircle;
    if (name == "segment") return ArcKind::Segment;
    throw Error(ErrorKind::BadArgument, "unknown arc '" + name + "' (expected halfcircle or segment)");
}

std::string to_string(ArcKind kind) { return kind == ArcKind::HalfCircle ? "halfcircle" : "segment"; }

SpherePoint Arc::point(double t) const {
    if (kind == ArcKind::HalfCircle) return {std::cos(std::numbers::pi * t), std::sin(std::numbers::pi * t)};
    return {2.0 * t - 1.0, 0.0};
}

std::pair<double, double> Arc::tangent(double t) const {
    if (kind == ArcKind::HalfCircle) return {-std::sin(std::numbers::pi * t), std::cos(std::numbers::pi * t)};
    return {1.0, 0.0};
}

std::vector<SpherePoint> ArcSpectrumEnsemble::spheres() const {
    std::vector<SpherePoint> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back(arc.point(t));
    }
    return out;
}

QMatrix ArcSpectrumEnsemble::generate() const {
    Rng rng(seed);
    const auto s = spheres();
    return random_normal_with_spectrum(s, rng);
}

QMatrix random_schatten_perturbation(std::size_t n, double k, double target_norm, Rng& rng) {
    QMatrix b = random_matrix(n, rng);
    const double current = schatten_norm(b, k);
    return b * (target_norm / current);
}

Quaternion SegmentProbe::at(double d) const { return {s0.u + d * du, s0.v + d * dv, 0.0, 0.0}; }

SegmentProbe SegmentProbe::leaving(const Arc& arc, double t0, std::pair<double, double> direction, double d0, int count) {
    const double len = std::hypot(direction.first, direction.second);
    if (!(len > 0.0)) throw Error(ErrorKind::BadArgument, "probe direction must be non-zero");
    const double du = direction.first / len;
    const double dv = direction.second / len;
    const auto [tu, tv] = arc.tangent(t0);
    const double cosine = std::abs(du * tu + dv * tv);
    if (cosine > std::cos(10.0 * std::numbers::pi / 180.0))
        throw Error(ErrorKind::BadArgument, "probe direction is within 10 degrees of the arc tangent");
    SegmentProbe p;
    p.s0 = arc.point(t0);
    p.du = du;
    p.dv = dv;
    for (int i = 0; i < count; ++i) p.distances.push_back(d0 * std::ldexp(1.0, -i));
    return p;
}

SegmentProbe SegmentProbe::normal_to(const Arc& arc, double t0, double d0, int count) {
    if (arc.kind == ArcKind::Segment) return leaving(arc, t0, {0.0, 1.0}, d0, count);
    const SpherePoint p = arc.point(t0);
    return leaving(arc, t0, {p.u, p.v}, d0, count);
}

namespace {

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

struct Sample {
    double norm_q;
    double norm_sl;
};

// nullopt when the pencil is too ill-conditioned to invert meaningfully.
std::optional<Sample> measure(const QMatrix& t, const Quaternion& s, double scale) {
    const QMatrix pencil = quadratic_pencil(t, s);
    const Eigen::VectorXd sv = complex_adjoint_singular_values(pencil);
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (!(smin > 1e-10 * scale)) throw Error(ErrorKind::ProbeHitsSpectrum, "probe point lies on the S-spectrum");
    if (smax / smin > 1e14) return std::nullopt;
    const QMatrix q = inverse(pencil);
    return Sample{operator_norm(q), operator_norm(s_resolvent_left(t, q, s))};
}

}  // namespace

GrowthReport growth_experiment(const QMatrix& a, const QMatrix& b, int k, const SegmentProbe& probe) {
    if (k < 1) throw Error(ErrorKind::BadArgument, "growth experiment requires k >= 1");
    const QMatrix t = a + b;
    const double nt = operator_norm(t);
    const double scale = (1.0 + nt) * (1.0 + nt);
    const double exponent = 2.0 * k + 2.0;

    GrowthReport r;
    r.k = k;
    std::vector<double> log_d, log_q, log_d_pos, log_log_q;
    for (double d : probe.distances) {
        const auto sample = measure(t, probe.at(d), scale);
        if (!sample) {
            r.stopped_early = true;
            break;
        }
        const double lq = std::log(sample->norm_q);
        GrowthRow row{d, sample->norm_q, sample->norm_sl, lq * std::pow(d, exponent)};
        r.fitted_k = r.rows.empty() ? row.fitted_k : std::max(r.fitted_k, row.fitted_k);
        r.rows.push_back(row);
        log_d.push_back(std::log(d));
        log_q.push_back(lq);
        if (lq > 0.0) {
            log_d_pos.push_back(std::log(d));
            log_log_q.push_back(std::log(lq));
        }
    }
    r.power_slope = least_squares_slope(log_d, log_q);
    r.log_growth_exponent = log_d_pos.size() >= 2 ? least_squares_slope(log_d_pos, log_log_q) : 0.0;
    r.bound_holds = r.log_growth_exponent >= -exponent - 0.5;
    return r;
}

void GrowthReport::write_csv(std::ostream& os) const {
    os << "d,norm_Q,norm_SL,fitted_K\n";
    char buf[128];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", row.d, row.norm_q, row.norm_sl, row.fitted_k);
        os << buf;
    }
}

HypothesisReport growth_hypothesis_check(const QMatrix& t, int max_k, const SegmentProbe& probe) {
    if (max_k < 1) throw Error(ErrorKind::BadArgument, "max_k must be >= 1");
    const double nt = operator_norm(t);
    const double scale = (1.0 + nt) * (1.0 + nt);

    HypothesisReport r;
    for (double d : probe.distances) {
        const auto sample = measure(t, probe.at(d), scale);
        if (!sample) break;
        r.rows.push_back({d, sample->norm_q, sample->norm_sl, 0.0});
    }
    if (r.rows.empty()) return r;

    for (int j = 1; j <= max_k; ++j) {
        std::vector<double> g;
        for (const auto& row : r.rows) g.push_back(std::max(0.0, std::log(row.norm_sl)) * std::pow(row.d, j));
        const double top = *std::max_element(g.begin(), g.end());
        r.fitted_k.push_back(top);
        // Accept when the envelope no longer grows at the closest approach.
        const bool attained_earlier =
            g.size() == 1 || std::any_of(g.begin(), g.end() - 1, [&](double x) { return x >= g.back(); });
        if (r.smallest_k == 0 && attained_earlier) r.smallest_k = j;
    }
    return r;
}

RestrictionReport restriction_spectrum_check(const QMatrix& t, std::size_t m, double slack) {
    const std::size_t n = t.size();
    if (m == 0 || m > n) throw Error(ErrorKind::BadArgument, "invariant block size out of range");
    const double tol = 1e-12 * std::max(1.0, operator_norm(t));
    for (std::size_t i = m; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (t(i, j).norm() > tol)
                throw Error(ErrorKind::NotBlockTriangular, "leading block does not span an invariant subspace");
    RestrictionReport r;
    r.restricted = s_spectrum(t.leading_block(m));
    r.full = full_s_spectrum(t);
    r.directed = directed_distance(r.restricted, r.full);
    r.holds = r.directed <= slack;
    return r;
}

WeylReport weyl_report(const QMatrix& a, const QMatrix& k, std::uint64_t seed, int samples) {
    WeylReport r;
    r.unperturbed = s_spectrum(a);
    r.perturbed = s_spectrum(a + k);
    for (const auto& s : r.perturbed.spheres) r.displacement.push_back(r.unperturbed.distance_to(s.point));

    Rng rng(seed);
    const double na = operator_norm(a);
    const double nk = operator_norm(k);
    r.holds = true;
    int taken = 0;
    while (taken < samples) {
        const Quaternion s = random_quaternion(rng) * (1.0 + na);
        const QMatrix pencil = quadratic_pencil(a, s);
        const Eigen::VectorXd sv = complex_adjoint_singular_values(pencil);
        if (sv(sv.size() - 1) < 1e-2 * sv(0)) continue;  // keep away from sigma_S(A)
        const double scale = (1.0 + na + nk + s.norm()) * (1.0 + na + nk + s.norm());
        const double residual = weyl_factorization_residual(a, k, s);
        r.max_factorization_residual = std::max(r.max_factorization_residual, residual);
        r.residual_scale = std::max(r.residual_scale, scale);
        if (!(residual < 1e-10 * scale)) r.holds = false;
        ++taken;
    }
    return r;
}

}  // namespace qspectral
