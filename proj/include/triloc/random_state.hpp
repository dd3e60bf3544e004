#pragma once

#include <random>
#include <vector>

#include "triloc/state.hpp"

namespace triloc {

/// Haar-random pure state vector of length `dim`.
std::vector<Complex> random_pure_vector(std::mt19937_64& rng, std::size_t dim);

/// Ginibre-ensemble mixed state G G^dagger / tr(G G^dagger) with a square G,
/// or a Haar pure state when `rank` is 1.
DensityMatrix random_density_matrix(std::mt19937_64& rng, std::size_t dim, std::size_t rank = 0);

/// Random single-qubit unitary (Haar).
CMatrix random_unitary_2x2(std::mt19937_64& rng);

}  // namespace triloc
