#include "qspectral/verify.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qspectral/error.hpp"
#include "qspectral/functional_calculus.hpp"
#include "qspectral/io.hpp"
#include "qspectral/perturbation.hpp"
#include "qspectral/random.hpp"
#include "qspectral/schatten.hpp"
#include "qspectral/slice_function.hpp"
#include "qspectral/spectrum.hpp"

namespace qspectral {

namespace {

// Empty string on success, otherwise a description of the failing input.
using Property = std::function<std::string(Rng&)>;

std::string describe(const std::string& what, double value, double bound) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << value << " exceeds " << bound;
    return os.str();
}

std::string with_matrix(const std::string& msg, const QMatrix& t) { return msg + "\n  T = " + io::dump(io::to_json(t)); }

std::size_t dim(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string norm_multiplicative(Rng& rng) {
    for (int i = 0; i < 200; ++i) {
        const Quaternion p = random_quaternion(rng);
        const Quaternion q = random_quaternion(rng);
        const double err = std::abs((p * q).norm() - p.norm() * q.norm());
        if (err > 1e-12 * p.norm() * q.norm()) return describe("||pq| - |p||q||", err, 1e-12 * p.norm() * q.norm());
    }
    return {};
}

std::string adjoint_identity(Rng& rng) {
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = dim(rng, 1, 8);
        const QMatrix t = random_matrix(n, rng);
        const QVector x = random_vector(n, rng);
        const QVector y = random_vector(n, rng);
        const double err = (inner(adjoint(t) * x, y) - inner(x, t * y)).norm();
        const double bound = 1e-11 * operator_norm(t) * norm(x) * norm(y);
        if (err > bound) return with_matrix(describe("|<T*x,y> - <x,Ty>|", err, bound), t);
    }
    return {};
}

std::string complex_adjoint_homomorphism(Rng& rng) {
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = dim(rng, 1, 8);
        const QMatrix t = random_matrix(n, rng);
        const QMatrix s = random_matrix(n, rng);
        const double err = (complex_adjoint(t * s) - complex_adjoint(t) * complex_adjoint(s)).cwiseAbs().maxCoeff();
        const double bound = 1e-12 * operator_norm(t) * operator_norm(s);
        if (err > bound) return with_matrix(describe("chi(TS) - chi(T)chi(S)", err, bound), t);
    }
    return {};
}

std::string resolvent_equation(Rng& rng) {
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = dim(rng, 2, 6);
        const QMatrix t = random_matrix(n, rng);
        const double nt = operator_norm(t);
        const Quaternion s = random_quaternion(rng) * nt;
        const Quaternion p = random_quaternion(rng) * nt;
        const double scale = (1.0 + nt) * (1.0 + nt);
        if (smallest_singular_value(quadratic_pencil(t, s)) < 1e-6 * scale ||
            smallest_singular_value(quadratic_pencil(t, p)) < 1e-6 * scale)
            continue;
        const auto r = verify_s_resolvent_equation(t, s, p);
        const double bound = 1e-9 * scale * (1.0 + nt);
        if (std::max(r.first_form, r.second_form) > bound)
            return with_matrix(describe("S-resolvent equation residual", std::max(r.first_form, r.second_form), bound), t);
    }
    return {};
}

std::string normal_bound(Rng& rng) {
    for (int i = 0; i < 20; ++i) {
        const QMatrix t = random_normal(dim(rng, 1, 8), rng);
        for (int j = 0; j < 10; ++j) {
            const Quaternion s = random_quaternion(rng) * 2.0;
            if (!in_resolvent_set(t, s)) continue;
            const auto b = normal_resolvent_bound(t, s);
            if (b.lhs > b.rhs * (1.0 + 1e-9)) return with_matrix(describe("||Q_s(T)||", b.lhs, b.rhs), t);
        }
    }
    return {};
}

std::string functional_calculus_compatibility(Rng& rng) {
    for (int i = 0; i < 5; ++i) {
        const QMatrix t = random_matrix(dim(rng, 1, 4), rng);
        std::vector<Quaternion> coeffs;
        for (int k = 0; k < 4; ++k) coeffs.push_back(random_quaternion(rng));
        const SliceSeries f(i % 2 == 0 ? Side::Left : Side::Right, coeffs);
        const double radius = 2.0 * operator_norm(t) + 1.0;
        const QMatrix via_integral = functional_calculus(t, f, SliceContour::circle(ImaginaryUnit::e1(), radius));
        const QMatrix direct = apply_series_directly(t, f);
        const double scale = std::max(1.0, operator_norm(direct));
        const double err = operator_norm(via_integral - direct);
        if (err > 1e-7 * scale) return with_matrix(describe("||f(T) - sum T^n a_n||", err, 1e-7 * scale), t);
    }
    return {};
}

std::string schatten_inequalities(Rng& rng) {
    const double exponents[] = {1.0, 2.0, 3.0, kInfinity};
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = dim(rng, 1, 6);
        const QMatrix t = random_matrix(n, rng);
        const QMatrix a = random_matrix(n, rng);
        const auto report = check_ideal_inequalities(t, a, exponents[i % 4]);
        if (!report.ok()) return with_matrix(report.violations.front(), t);
    }
    return {};
}

std::string restriction_inclusion(Rng& rng) {
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = dim(rng, 2, 6);
        const std::size_t m = dim(rng, 1, n - 1);
        QMatrix t = random_matrix(n, rng);
        for (std::size_t r = m; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) t(r, c) = 0.0;
        const auto report = restriction_spectrum_check(t, m);
        if (!report.holds) return with_matrix(describe("restricted spectrum distance", report.directed, 1e-7), t);
    }
    return {};
}

std::string weyl_identity(Rng& rng) {
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = dim(rng, 1, 5);
        const QMatrix a = random_matrix(n, rng);
        const QMatrix k = random_matrix(n, rng) * 0.1;
        const auto report = weyl_report(a, k, rng(), 5);
        if (!report.holds)
            return with_matrix(describe("Weyl factorization residual", report.max_factorization_residual,
                                        1e-10 * report.residual_scale),
                               a);
    }
    return {};
}

std::string star_associativity(Rng& rng) {
    for (int i = 0; i < 20; ++i) {
        auto series = [&] {
            std::vector<Quaternion> c;
            for (std::size_t k = 0, deg = dim(rng, 0, 4); k <= deg; ++k) c.push_back(random_quaternion(rng));
            return SliceSeries(Side::Left, c);
        };
        const SliceSeries f = series(), g = series(), h = series();
        const auto lhs = star_multiply(star_multiply(f, g), h).coefficients();
        const auto rhs = star_multiply(f, star_multiply(g, h)).coefficients();
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            const double err = (lhs[k] - rhs[k]).norm();
            if (err > 1e-12 * (1.0 + lhs[k].norm())) return describe("star product associativity defect", err, 1e-12);
        }
    }
    return {};
}

}  // namespace

bool run_invariant_suite(std::uint64_t seed, std::ostream& out) {
    const std::vector<std::pair<const char*, Property>> properties = {
        {"quaternion norm is multiplicative", norm_multiplicative},
        {"adjoint identity <T*x,y> = <x,Ty>", adjoint_identity},
        {"complex adjoint is a homomorphism", complex_adjoint_homomorphism},
        {"S-resolvent equation, both forms", resolvent_equation},
        {"normal pseudo-resolvent bound", normal_bound},
        {"functional calculus matches polynomial evaluation", functional_calculus_compatibility},
        {"Schatten ideal and singular value inequalities", schatten_inequalities},
        {"restriction spectrum inclusion", restriction_inclusion},
        {"Weyl factorization identity", weyl_identity},
        {"star product associativity", star_associativity},
    };
    for (std::size_t i = 0; i < properties.size(); ++i) {
        Rng rng(seed + 7919 * i);
        std::string failure;
        try {
            failure = properties[i].second(rng);
        } catch (const Error& e) {
            failure = std::string("unexpected error: ") + e.what();
        }
        if (!failure.empty()) {
            out << "FAIL " << properties[i].first << ": " << failure << " (seed " << seed << ")\n";
            return false;
        }
        out << "ok   " << properties[i].first << '\n';
    }
    return true;
}

}  // namespace qspectral
