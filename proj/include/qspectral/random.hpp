#pragma once

// Seeded generators for quaternionic test matrices.

#include <cstdint>
#include <random>
#include <span>

#include "qspectral/qmatrix.hpp"

namespace qspectral {

using Rng = std::mt19937_64;

/// Each component standard Gaussian.
Quaternion random_quaternion(Rng& rng);
ImaginaryUnit random_unit(Rng& rng);
QMatrix random_matrix(std::size_t n, Rng& rng);
QVector random_vector(std::size_t n, Rng& rng);

/// Gram-Schmidt of a Gaussian matrix.
QMatrix random_unitary(std::size_t n, Rng& rng);

/// U diag(u_k + e1 v_k) U* with a random unitary U.
QMatrix random_normal_with_spectrum(std::span<const SpherePoint> spheres, Rng& rng);

/// Normal matrix whose spheres are Gaussian points in the closed upper half plane.
QMatrix random_normal(std::size_t n, Rng& rng);

}  // namespace qspectral
