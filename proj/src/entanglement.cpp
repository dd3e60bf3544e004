#include "triloc/entanglement.hpp"

#include <cmath>

#include "triloc/error.hpp"
#include "triloc/linalg.hpp"

namespace triloc {
namespace {

// Eigensolver noise below this counts as zero before clamping.
constexpr double kNegativityFloor = 1e-10;

// Negativity of a two-qubit marginal, transposing `which` (0 = first kept qubit).
double pair_negativity(const DensityMatrix& pair, int which) {
  return negativity(pair, which == 0 ? Qubit::A : Qubit::B);
}

}  // namespace

double trace_norm(const CMatrix& m) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues(m)) s += std::abs(v);
  return s;
}

double negativity(const DensityMatrix& rho, Qubit partition) {
  if (rho.dim() == 2) throw Error(ErrorKind::BadSubsystem, "negativity needs at least two qubits");
  const double n = trace_norm(partial_transpose(rho, partition)) - 1.0;
  return n < kNegativityFloor ? 0.0 : n;
}

PiTangleBreakdown pi_tangle(const DensityMatrix& rho) {
  if (rho.dim() != 8) throw Error(ErrorKind::DimensionMismatch, "pi-tangle needs a three-qubit state");
  PiTangleBreakdown out;
  out.n_one_vs_two = {negativity(rho, Qubit::A), negativity(rho, Qubit::B), negativity(rho, Qubit::C)};

  const auto ab = partial_trace(rho, {Qubit::A, Qubit::B});
  const auto ac = partial_trace(rho, {Qubit::A, Qubit::C});
  const auto bc = partial_trace(rho, {Qubit::B, Qubit::C});
  // N_xy transposes x on rho_xy.
  const double n_ab = pair_negativity(ab, 0), n_ba = pair_negativity(ab, 1);
  const double n_ac = pair_negativity(ac, 0), n_ca = pair_negativity(ac, 1);
  const double n_bc = pair_negativity(bc, 0), n_cb = pair_negativity(bc, 1);
  out.n_pairwise = {n_ab, n_ac, n_ba, n_bc, n_ca, n_cb};

  const auto sq = [](double x) { return x * x; };
  out.pi_a = sq(out.n_one_vs_two[0]) - sq(n_ab) - sq(n_ac);
  out.pi_b = sq(out.n_one_vs_two[1]) - sq(n_ba) - sq(n_bc);
  out.pi_c = sq(out.n_one_vs_two[2]) - sq(n_ca) - sq(n_cb);
  out.pi_abc = (out.pi_a + out.pi_b + out.pi_c) / 3.0;
  return out;
}

}  // namespace triloc
