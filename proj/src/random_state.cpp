#include "triloc/random_state.hpp"

#include <cmath>

namespace triloc {

std::vector<Complex> random_pure_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (auto& x : v) {
    x = Complex{n(rng), n(rng)};
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

DensityMatrix random_density_matrix(std::mt19937_64& rng, std::size_t dim, std::size_t rank) {
  if (rank == 1) return DensityMatrix::from_trusted(CMatrix::outer(random_pure_vector(rng, dim)));
  const std::size_t cols = rank == 0 ? dim : rank;
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix g(dim, cols);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = Complex{n(rng), n(rng)};
  CMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= 1.0 / tr;
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < dim; ++c) m(c, r) = std::conj(m(r, c));
  }
  return DensityMatrix::from_trusted(std::move(m));
}

CMatrix random_unitary_2x2(std::mt19937_64& rng) {
  // Columns: a Haar vector and its orthogonal complement, times a random phase.
  const auto v = random_pure_vector(rng, 2);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::acos(-1.0));
  const Complex phase = std::polar(1.0, u(rng));
  return CMatrix{{v[0], -std::conj(v[1]) * phase}, {v[1], std::conj(v[0]) * phase}};
}

}  // namespace triloc
