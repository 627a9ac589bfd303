#pragma once

// S-functional calculus by trapezoid quadrature of the slice contour integral
//   f(T) = 1/(2 pi) \int S_L^{-1}(s,T) ds_J f(s)     (left series)
//   f(T) = 1/(2 pi) \int f(s) ds_J S_R^{-1}(s,T)     (right series)
// over positively oriented circles in a slice C_J, with ds_J = gamma'(t) (-J) dt.

#include <complex>
#include <vector>

#include "qspectral/qmatrix.hpp"
#include "qspectral/slice_function.hpp"
#include "qspectral/spectrum.hpp"

namespace qspectral {

struct Circle {
    std::complex<double> center;  // coordinates in the slice
    double radius = 1.0;
};

struct ContourNode {
    Quaternion point;
    Quaternion weight;  // ds_J element including the 2 pi / N step
};

inline constexpr int kDefaultNodes = 512;

class SliceContour {
public:
    SliceContour(ImaginaryUnit unit, std::vector<Circle> circles, int nodes_per_circle = kDefaultNodes);

    /// Circle of the given radius centred at the origin.
    static SliceContour circle(ImaginaryUnit unit, double radius, int nodes_per_circle = kDefaultNodes);

    const ImaginaryUnit& unit() const { return unit_; }
    const std::vector<Circle>& circles() const { return circles_; }
    int nodes_per_circle() const { return nodes_per_circle_; }
    std::vector<ContourNode> nodes() const;

    /// Number of circles enclosing the slice point z.
    int winding(std::complex<double> z) const;
    /// Distance from z to the nearest circle.
    double distance_to_curve(std::complex<double> z) const;
    double max_modulus() const;

private:
    ImaginaryUnit unit_;
    std::vector<Circle> circles_;
    int nodes_per_circle_;
};

enum class Enclosure { All, Subset };

/// Throws ContourNotAdmissible unless every sphere of the spectrum stays at least
/// 0.1 (1 + ||T||) away from the curve, both points u +- J v of a sphere are
/// enclosed the same number of times (0 or 1), and with Enclosure::All every sphere is enclosed.
void check_admissible(const QMatrix& t, const SpectrumResult& spectrum, const SliceContour& contour, Enclosure mode);

/// threads > 1 evaluates quadrature nodes concurrently; the sum is always taken in node order.
QMatrix functional_calculus(const QMatrix& t, const SliceSeries& f, const SliceContour& contour, int threads = 1);

/// sum T^n a_n (left) or sum a_n T^n (right).
QMatrix apply_series_directly(const QMatrix& t, const SliceSeries& f);

/// f = 1 integrated over a contour that may enclose only part of the spectrum.
QMatrix riesz_projector(const QMatrix& t, const SliceContour& contour, int threads = 1);

/// round(Re tr chi(P) / 2)
int projector_rank(const QMatrix& p);

/// Hausdorff distance between sigma_S(f(T)) and { [f(s)] : [s] in sigma_S(T) } for
/// normal T and intrinsic f; f(T) is computed with the functional calculus.
double spectral_mapping_check(const QMatrix& t, const SliceSeries& f);

}  // namespace qspectral
