#include "qspectral/functional_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "qspectral/error.hpp"

namespace qspectral {

SliceContour::SliceContour(ImaginaryUnit unit, std::vector<Circle> circles, int nodes_per_circle)
    : unit_(unit), circles_(std::move(circles)), nodes_per_circle_(nodes_per_circle) {
    if (circles_.empty()) throw Error(ErrorKind::BadArgument, "contour needs at least one circle");
    if (nodes_per_circle_ < 8) throw Error(ErrorKind::BadArgument, "contour needs at least 8 nodes per circle");
    for (const auto& c : circles_)
        if (!(c.radius > 0.0)) throw Error(ErrorKind::BadArgument, "circle radius must be positive");
}

SliceContour SliceContour::circle(ImaginaryUnit unit, double radius, int nodes_per_circle) {
    return SliceContour(unit, {Circle{{0.0, 0.0}, radius}}, nodes_per_circle);
}

std::vector<ContourNode> SliceContour::nodes() const {
    std::vector<ContourNode> out;
    out.reserve(circles_.size() * static_cast<std::size_t>(nodes_per_circle_));
    const double step = 2.0 * std::numbers::pi / nodes_per_circle_;
    for (const auto& c : circles_) {
        for (int k = 0; k < nodes_per_circle_; ++k) {
            const std::complex<double> offset = std::polar(c.radius, step * k);
            // gamma'(t)(-J) = (J r e^{Jt})(-J) = r e^{Jt}
            out.push_back({unit_.point(c.center + offset), unit_.point(offset * step)});
        }
    }
    return out;
}

int SliceContour::winding(std::complex<double> z) const {
    int w = 0;
    for (const auto& c : circles_)
        if (std::abs(z - c.center) < c.radius) ++w;
    return w;
}

double SliceContour::distance_to_curve(std::complex<double> z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : circles_) best = std::min(best, std::abs(std::abs(z - c.center) - c.radius));
    return best;
}

double SliceContour::max_modulus() const {
    double best = 0.0;
    for (const auto& c : circles_) best = std::max(best, std::abs(c.center) + c.radius);
    return best;
}

void check_admissible(const QMatrix& t, const SpectrumResult& spectrum, const SliceContour& contour, Enclosure mode) {
    const double margin = 0.1 * (1.0 + operator_norm(t));
    for (const auto& sphere : spectrum.spheres) {
        const std::complex<double> upper(sphere.point.u, sphere.point.v);
        const std::complex<double> lower(sphere.point.u, -sphere.point.v);
        if (contour.distance_to_curve(upper) < margin || contour.distance_to_curve(lower) < margin)
            throw Error(ErrorKind::ContourNotAdmissible, "contour passes too close to the S-spectrum");
        const int wu = contour.winding(upper);
        const int wl = contour.winding(lower);
        if (wu != wl) throw Error(ErrorKind::ContourNotAdmissible, "enclosed set is not axially symmetric");
        if (wu > 1) throw Error(ErrorKind::ContourNotAdmissible, "overlapping circles");
        if (mode == Enclosure::All && wu != 1)
            throw Error(ErrorKind::ContourNotAdmissible, "contour does not enclose the whole S-spectrum");
    }
}

namespace {

QMatrix integrate(const QMatrix& t, const SliceContour& contour, int threads, const SliceSeries* f) {
    const std::size_t n = t.size();
    const auto nodes = contour.nodes();
    std::vector<QMatrix> terms(nodes.size());

    auto term = [&](std::size_t k) {
        const Quaternion& s = nodes[k].point;
        QMatrix q;
        try {
            q = inverse(quadratic_pencil(t, s));
        } catch (const Error&) {
            throw Error(ErrorKind::OnSpectrum, "quadrature node on the S-spectrum");
        }
        const Quaternion fs = f ? (*f)(s) : Quaternion(1.0);
        if (!f || f->side() == Side::Left) return s_resolvent_left(t, q, s) * (nodes[k].weight * fs);
        return (fs * nodes[k].weight) * s_resolvent_right(t, q, s);
    };

    if (threads <= 1) {
        for (std::size_t k = 0; k < nodes.size(); ++k) terms[k] = term(k);
    } else {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        {
            std::vector<std::jthread> pool;
            for (int w = 0; w < threads; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t k = static_cast<std::size_t>(w); k < nodes.size(); k += static_cast<std::size_t>(threads))
                            terms[k] = term(k);
                    } catch (...) {
                        errors[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    QMatrix sum(n);
    for (const auto& m : terms) sum += m;
    return sum * (1.0 / (2.0 * std::numbers::pi));
}

}  // namespace

QMatrix functional_calculus(const QMatrix& t, const SliceSeries& f, const SliceContour& contour, int threads) {
    if (!(contour.max_modulus() < f.radius()))
        throw Error(ErrorKind::ContourNotAdmissible, "contour leaves the convergence ball of f");
    check_admissible(t, s_spectrum(t), contour, Enclosure::All);
    return integrate(t, contour, threads, &f);
}

QMatrix apply_series_directly(const QMatrix& t, const SliceSeries& f) {
    const std::size_t n = t.size();
    QMatrix sum(n);
    QMatrix power = QMatrix::identity(n);
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        const Quaternion& a = f.coefficients()[k];
        sum += f.side() == Side::Left ? power * a : a * power;
        if (k + 1 < f.coefficients().size()) power = power * t;
    }
    return sum;
}

QMatrix riesz_projector(const QMatrix& t, const SliceContour& contour, int threads) {
    check_admissible(t, s_spectrum(t), contour, Enclosure::Subset);
    return integrate(t, contour, threads, nullptr);
}

int projector_rank(const QMatrix& p) {
    return static_cast<int>(std::lround(complex_adjoint(p).trace().real() / 2.0));
}

double spectral_mapping_check(const QMatrix& t, const SliceSeries& f) {
    if (!f.is_intrinsic()) throw Error(ErrorKind::NotIntrinsic, "spectral mapping requires real coefficients");
    if (!is_normal(t)) throw Error(ErrorKind::NotNormal, "spectral mapping check requires a normal operator");
    const double nt = operator_norm(t);
    const double inner_radius = nt + 0.1 * (1.0 + nt);
    double radius = 2.0 * nt + 1.0;
    if (!(radius < f.radius())) {
        if (!(inner_radius < f.radius()))
            throw Error(ErrorKind::ContourNotAdmissible, "convergence ball of f does not contain the S-spectrum with margin");
        radius = 0.5 * (inner_radius + f.radius());
    }
    const QMatrix ft = functional_calculus(t, f, SliceContour::circle(ImaginaryUnit::e1(), radius));

    const SpectrumResult sigma = s_spectrum(t);
    SpectrumResult mapped;
    for (const auto& sphere : sigma.spheres) {
        const Quaternion s = sphere.point.representative(ImaginaryUnit::e1());
        mapped.spheres.push_back({SpherePoint::of(f(s)), sphere.multiplicity});
    }
    return hausdorff_distance(s_spectrum(ft), mapped);
}

}  // namespace qspectral
