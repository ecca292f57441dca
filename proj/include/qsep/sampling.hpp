#pragma once

#include <cstdint>
#include <random>

#include "qsep/eb.hpp"
#include "qsep/linalg.hpp"

namespace qsep {

// Seeded generators for test corpora. All draws are deterministic functions of
// the passed engine state.

Vector random_pure_state(std::mt19937_64& rng, int d);
Matrix random_density_matrix(std::mt19937_64& rng, int d, int rank = 0);  // 0 = full

// Convex mixture of random product states; separable by construction.
Matrix random_product_mixture(std::mt19937_64& rng, int M, int N, int terms);

// Trace-preserving Kraus family from a Haar-ish random isometry.
KrausSet random_tp_kraus(std::mt19937_64& rng, int M, int N, int count);

}  // namespace qsep
