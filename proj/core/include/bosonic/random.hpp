#ifndef BOSONIC_RANDOM_HPP
#define BOSONIC_RANDOM_HPP

// Seeded generators for property checks. Symplectic maps are built as
// U1 * S * U2 with U1, U2 Haar-like unitaries and S a product of single-mode
// squeezes with random phases; ||Z_g|| is then the largest tanh r_j. This
// family spans Sp(V) in finite dimension.

#include <random>

#include "bosonic/linspace.hpp"
#include "bosonic/symalg.hpp"

namespace bosonic {

using Rng = std::mt19937_64;

/// Complex Gaussian entries, each component N(0, scale^2 / 2).
HVector random_vector(Rng& rng, Eigen::Index d, double scale = 1.0);

/// Uniformly random direction with the given Euclidean norm.
HVector random_vector_with_norm(Rng& rng, Eigen::Index d, double norm);

CMatrix random_unitary(Rng& rng, Eigen::Index d);

/// Symmetric complex matrix rescaled to the given spectral norm.
SymAntilinear random_symmetric(Rng& rng, Eigen::Index n, double spectral_norm);

/// Symplectic map with ||Z_g|| <= max_z_norm (< 1).
RealLinearMap random_symplectic(Rng& rng, Eigen::Index d, double max_z_norm = 0.6);

/// Conjugation composed with a random symplectic map.
RealLinearMap random_antisymplectic(Rng& rng, Eigen::Index d, double max_z_norm = 0.6);

/// Random polynomial supported on degrees <= max_degree.
PolyVector random_poly(Rng& rng, int vars, int truncation, int max_degree);

/// Random antidual table with entries scaled by 1 / sqrt(alpha!).
DualTable random_table(Rng& rng, int vars, int truncation, Space space = Space::V);

}  // namespace bosonic

#endif  // BOSONIC_RANDOM_HPP
