#pragma once

#include <array>

#include "triloc/state.hpp"

namespace triloc {

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const CMatrix& m);

/// ||rho^{T_x}|| - 1, clamped at zero. For three qubits this is the x|rest
/// cut; for two qubits the cut between the pair.
double negativity(const DensityMatrix& rho, Qubit partition);

struct PiTangleBreakdown {
  double pi_a = 0.0;
  double pi_b = 0.0;
  double pi_c = 0.0;
  /// N_a(bc), N_b(ac), N_c(ab)
  std::array<double, 3> n_one_vs_two{};
  /// N_ab, N_ac, N_ba, N_bc, N_ca, N_cb
  std::array<double, 6> n_pairwise{};
  double pi_abc = 0.0;
};

/// pi_a = N_a(bc)^2 - N_ab^2 - N_ac^2 (and cyclic); pi_abc is their mean.
/// Components are not clamped.
PiTangleBreakdown pi_tangle(const DensityMatrix& rho);

}  // namespace triloc
