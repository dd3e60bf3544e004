#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "triloc/cmatrix.hpp"

namespace triloc {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
/// Custom state files may undershoot positivity by this much; they get
/// projected back onto the PSD cone instead of being rejected.
inline constexpr double kPsdRepairTol = 1e-7;

/// Qubit labels. Qubit A is the most significant bit of the basis index |abc>.
enum class Qubit { A = 0, B = 1, C = 2 };

/// Hermitian, unit-trace, positive semidefinite matrix on 1, 2 or 3 qubits.
/// Construction validates; a DensityMatrix in hand always satisfies the
/// invariants.
class DensityMatrix {
 public:
  /// Throws Error{InvariantViolation} (or DimensionMismatch for dim not in {2,4,8}).
  explicit DensityMatrix(CMatrix m);

  std::size_t dim() const noexcept { return mat_.rows(); }
  int qubits() const noexcept { return dim() == 2 ? 1 : dim() == 4 ? 2 : 3; }
  const CMatrix& matrix() const noexcept { return mat_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  /// Trusted construction for matrices produced by exact state algebra
  /// (mixtures of valid states, partial traces). Checks dimension, Hermiticity
  /// and trace but skips the eigen-decomposition.
  static DensityMatrix from_trusted(CMatrix m);

 private:
  struct Trusted {};
  DensityMatrix(CMatrix m, Trusted);
  CMatrix mat_;
};

/// Description of the first invariant `m` violates, or nullopt if it is a
/// valid density matrix.
std::optional<std::string> density_matrix_defect(const CMatrix& m);

/// Real three-qubit correlation tensor t[i][j][k] = tr(rho s_i (x) s_j (x) s_k).
struct CorrelationTensor {
  std::array<std::array<std::array<double, 4>, 4>, 4> t{};

  double operator()(int i, int j, int k) const { return t[i][j][k]; }
  double& operator()(int i, int j, int k) { return t[i][j][k]; }
};

CorrelationTensor correlation_tensor(const DensityMatrix& rho);

/// Inverse of correlation_tensor: rho = (1/8) sum t_ijk s_i (x) s_j (x) s_k.
/// Throws Error{InvalidTensor} unless t_000 == 1 (within 1e-12).
DensityMatrix reconstruct(const CorrelationTensor& t);

/// Reduced state on the ordered pair `keep` of a three-qubit state.
DensityMatrix partial_trace(const DensityMatrix& rho, std::pair<Qubit, Qubit> keep);

/// Single-qubit marginal.
DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep);

/// Transpose on one qubit. For 2- and 3-qubit matrices any qubit index valid
/// for the dimension is accepted. Result is Hermitian, possibly not PSD.
CMatrix partial_transpose(const CMatrix& m, Qubit subsystem);
inline CMatrix partial_transpose(const DensityMatrix& rho, Qubit subsystem) {
  return partial_transpose(rho.matrix(), subsystem);
}

enum class StateFamily { W, GhzClass, Ground, Custom };

struct StateFamilyParams {
  StateFamily family = StateFamily::W;
  double p = 1.0;
  double theta = 0.0;
  double theta3 = 0.0;
  std::optional<std::filesystem::path> file;
};

/// (|100> + |010> + |001>)/sqrt(3).
DensityMatrix w_state();
/// |000><000|.
DensityMatrix ground_state();
/// p |psi><psi| + (1 - p) I/8 with
/// |psi> = cos(theta)|000> + sin(theta)|11>(cos(theta3)|0> + sin(theta3)|1>).
DensityMatrix ghz_class(double p, double theta, double theta3);

/// Throws Error{FileParse} or Error{InvariantViolation} for custom states.
/// `warning` receives a note when a custom file was repaired.
DensityMatrix make_state(const StateFamilyParams& params, std::string* warning = nullptr);

struct LoadedState {
  DensityMatrix rho;
  std::optional<std::string> warning;
};

/// Reads a JSON object {"dim": n, "re": [[...]], "im": [[...]]} (row-major).
LoadedState load_density_matrix(const std::filesystem::path& path);
LoadedState parse_density_matrix(const std::string& text);

/// Convex combination w*a + (1-w)*b of states of equal dimension.
DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b);

}  // namespace triloc
