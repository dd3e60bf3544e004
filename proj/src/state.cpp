#include "triloc/state.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triloc/error.hpp"
#include "triloc/linalg.hpp"

namespace triloc {
namespace {

bool valid_dim(std::size_t d) { return d == 2 || d == 4 || d == 8; }

// Single-qubit Pauli acting on basis bit b: returns (output bit, phase).
std::pair<int, Complex> pauli_action(int index, int bit) {
  switch (index) {
    case 0: return {bit, 1.0};
    case 1: return {bit ^ 1, 1.0};
    case 2: return {bit ^ 1, bit == 0 ? Complex{0.0, 1.0} : Complex{0.0, -1.0}};
    default: return {bit, bit == 0 ? 1.0 : -1.0};
  }
}

// s_i (x) s_j (x) s_k maps |col> to phase * |row>. Returns row and phase.
std::pair<std::size_t, Complex> pauli_string_action(int i, int j, int k, std::size_t col) {
  const auto [ra, pa] = pauli_action(i, static_cast<int>((col >> 2) & 1));
  const auto [rb, pb] = pauli_action(j, static_cast<int>((col >> 1) & 1));
  const auto [rc, pc] = pauli_action(k, static_cast<int>(col & 1));
  return {static_cast<std::size_t>((ra << 2) | (rb << 1) | rc), pa * pb * pc};
}

std::size_t bit_of(Qubit q, int n_qubits) { return static_cast<std::size_t>(n_qubits - 1 - static_cast<int>(q)); }

std::string describe(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

}  // namespace

std::optional<std::string> density_matrix_defect(const CMatrix& m) {
  if (!m.square()) return "matrix is not square";
  if (!valid_dim(m.rows())) return "dimension must be 2, 4 or 8";
  for (const auto& x : m.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return "non-finite entry";
  if (const double h = hermiticity_defect(m); h > kHermitianTol) return "not Hermitian (defect " + describe(h) + ")";
  if (const double t = std::abs(m.trace() - 1.0); t > kTraceTol) return "trace differs from 1 by " + describe(t);
  const auto eig = hermitian_eigenvalues(m);
  if (eig.front() < -kPsdTol) return "not positive semidefinite (min eigenvalue " + describe(eig.front()) + ")";
  return std::nullopt;
}

DensityMatrix::DensityMatrix(CMatrix m) : mat_(std::move(m)) {
  if (!mat_.square() || !valid_dim(mat_.rows()))
    throw Error(ErrorKind::DimensionMismatch, "density matrix dimension must be 2, 4 or 8");
  if (auto defect = density_matrix_defect(mat_)) throw Error(ErrorKind::InvariantViolation, *defect);
}

DensityMatrix::DensityMatrix(CMatrix m, Trusted) : mat_(std::move(m)) {
  if (!mat_.square() || !valid_dim(mat_.rows()))
    throw Error(ErrorKind::DimensionMismatch, "density matrix dimension must be 2, 4 or 8");
  if (hermiticity_defect(mat_) > kHermitianTol || std::abs(mat_.trace() - 1.0) > kTraceTol)
    throw Error(ErrorKind::InvariantViolation, "trusted construction received a non-state");
}

DensityMatrix DensityMatrix::from_trusted(CMatrix m) { return DensityMatrix(std::move(m), Trusted{}); }

CorrelationTensor correlation_tensor(const DensityMatrix& rho) {
  if (rho.dim() != 8) throw Error(ErrorKind::DimensionMismatch, "correlation tensor needs an 8x8 state");
  CorrelationTensor out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        // tr(rho P) = sum_c P(row(c), c) rho(c, row(c))
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < 8; ++c) {
          const auto [r, phase] = pauli_string_action(i, j, k, c);
          acc += phase * rho(c, r);
        }
        out.t[i][j][k] = acc.real();
      }
  return out;
}

DensityMatrix reconstruct(const CorrelationTensor& t) {
  if (std::abs(t(0, 0, 0) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidTensor, "t_000 must equal 1");
  CMatrix m(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const double coeff = t(i, j, k);
        if (coeff == 0.0) continue;
        for (std::size_t c = 0; c < 8; ++c) {
          const auto [r, phase] = pauli_string_action(i, j, k, c);
          m(r, c) += coeff / 8.0 * phase;
        }
      }
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::pair<Qubit, Qubit> keep) {
  if (rho.dim() != 8) throw Error(ErrorKind::DimensionMismatch, "partial_trace to a pair needs an 8x8 state");
  const auto [q1, q2] = keep;
  if (q1 == q2) throw Error(ErrorKind::BadSubsystem, "kept qubits must be distinct");
  for (Qubit q : {q1, q2})
    if (static_cast<int>(q) < 0 || static_cast<int>(q) > 2) throw Error(ErrorKind::BadSubsystem, "qubit index out of range");
  const Qubit traced = static_cast<Qubit>(3 - static_cast<int>(q1) - static_cast<int>(q2));
  const std::size_t b1 = bit_of(q1, 3), b2 = bit_of(q2, 3), bt = bit_of(traced, 3);

  CMatrix out(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t e = 0; e < 2; ++e) {
        const std::size_t full_r = (((r >> 1) & 1) << b1) | ((r & 1) << b2) | (e << bt);
        const std::size_t full_c = (((c >> 1) & 1) << b1) | ((c & 1) << b2) | (e << bt);
        out(r, c) += rho(full_r, full_c);
      }
  return DensityMatrix::from_trusted(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep) {
  const int n = rho.qubits();
  if (static_cast<int>(keep) < 0 || static_cast<int>(keep) >= n) throw Error(ErrorKind::BadSubsystem, "qubit index out of range");
  const std::size_t bk = bit_of(keep, n);
  CMatrix out(2, 2);
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      // Rest of the bits must agree for the traced-out part.
      const std::size_t mask = ~(std::size_t{1} << bk);
      if ((r & mask) != (c & mask)) continue;
      out((r >> bk) & 1, (c >> bk) & 1) += rho(r, c);
    }
  return DensityMatrix::from_trusted(std::move(out));
}

CMatrix partial_transpose(const CMatrix& m, Qubit subsystem) {
  if (!m.square() || (m.rows() != 4 && m.rows() != 8))
    throw Error(ErrorKind::DimensionMismatch, "partial transpose needs a 4x4 or 8x8 matrix");
  const int n = m.rows() == 4 ? 2 : 3;
  const int q = static_cast<int>(subsystem);
  if (q < 0 || q >= n) throw Error(ErrorKind::BadSubsystem, "qubit index out of range for this dimension");
  const std::size_t bit = std::size_t{1} << bit_of(subsystem, n);
  CMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      // Swap the chosen qubit's bit between row and column index.
      const std::size_t rb = r & bit, cb = c & bit;
      out((r & ~bit) | cb, (c & ~bit) | rb) = m(r, c);
    }
  return out;
}

DensityMatrix w_state() {
  std::vector<Complex> v(8, 0.0);
  const double a = 1.0 / std::sqrt(3.0);
  v[0b100] = v[0b010] = v[0b001] = a;
  return DensityMatrix::from_trusted(CMatrix::outer(v));
}

DensityMatrix ground_state() {
  CMatrix m(8, 8);
  m(0, 0) = 1.0;
  return DensityMatrix::from_trusted(std::move(m));
}

DensityMatrix ghz_class(double p, double theta, double theta3) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "p must lie in [0, 1]");
  std::vector<Complex> v(8, 0.0);
  v[0b000] = std::cos(theta);
  v[0b110] = std::sin(theta) * std::cos(theta3);
  v[0b111] = std::sin(theta) * std::sin(theta3);
  CMatrix m = CMatrix::outer(v) * p;
  for (std::size_t i = 0; i < 8; ++i) m(i, i) += (1.0 - p) / 8.0;
  return DensityMatrix::from_trusted(std::move(m));
}

DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "mixing states of different dimension");
  if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorKind::InvalidArgument, "mixing weight must lie in [0, 1]");
  return DensityMatrix::from_trusted(a.matrix() * w + b.matrix() * (1.0 - w));
}

LoadedState parse_density_matrix(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FileParse, e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re") || !doc.contains("im"))
    throw Error(ErrorKind::FileParse, "expected an object with fields dim, re, im");
  if (!doc["dim"].is_number_integer()) throw Error(ErrorKind::FileParse, "dim must be an integer");
  const auto dim = doc["dim"].get<long long>();
  if (dim != 2 && dim != 4 && dim != 8) throw Error(ErrorKind::FileParse, "dim must be 2, 4 or 8");
  const auto n = static_cast<std::size_t>(dim);

  auto read_part = [&](const char* key) {
    const json& part = doc[key];
    if (!part.is_array() || part.size() != n) throw Error(ErrorKind::FileParse, std::string(key) + " must have dim rows");
    std::vector<double> out;
    out.reserve(n * n);
    for (const auto& row : part) {
      if (!row.is_array() || row.size() != n) throw Error(ErrorKind::FileParse, std::string(key) + " rows must have dim entries");
      for (const auto& x : row) {
        if (!x.is_number()) throw Error(ErrorKind::FileParse, std::string(key) + " entries must be numbers");
        out.push_back(x.get<double>());
      }
    }
    return out;
  };
  const auto re = read_part("re");
  const auto im = read_part("im");
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex{re[r * n + c], im[r * n + c]};

  for (const auto& x : m.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw Error(ErrorKind::InvariantViolation, "non-finite entry");
  if (const double h = hermiticity_defect(m); h > kHermitianTol)
    throw Error(ErrorKind::InvariantViolation, "not Hermitian (defect " + describe(h) + ")");
  if (const double t = std::abs(m.trace() - 1.0); t > kTraceTol)
    throw Error(ErrorKind::InvariantViolation, "trace differs from 1 by " + describe(t));

  auto eig = hermitian_eigen(m);
  const double min_eig = eig.values.front();
  if (min_eig >= -kPsdTol) return {DensityMatrix(std::move(m)), std::nullopt};
  if (min_eig < -kPsdRepairTol)
    throw Error(ErrorKind::InvariantViolation, "not positive semidefinite (min eigenvalue " + describe(min_eig) + ")");

  // Clip negative eigenvalues and renormalize.
  double total = 0.0;
  for (auto& v : eig.values) total += (v = std::max(v, 0.0));
  CMatrix repaired(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        repaired(r, c) += eig.values[k] / total * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
  }
  for (std::size_t r = 0; r < n; ++r) {
    repaired(r, r) = repaired(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) repaired(c, r) = std::conj(repaired(r, c));
  }
  return {DensityMatrix(std::move(repaired)),
          "min eigenvalue " + describe(min_eig) + " clipped to the PSD cone and renormalized"};
}

LoadedState load_density_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileParse, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_density_matrix(buffer.str());
}

DensityMatrix make_state(const StateFamilyParams& params, std::string* warning) {
  switch (params.family) {
    case StateFamily::W: return w_state();
    case StateFamily::Ground: return ground_state();
    case StateFamily::GhzClass: return ghz_class(params.p, params.theta, params.theta3);
    case StateFamily::Custom: {
      if (!params.file) throw Error(ErrorKind::FileParse, "custom state requires a file");
      auto loaded = load_density_matrix(*params.file);
      if (loaded.warning && warning) *warning = *loaded.warning;
      return std::move(loaded.rho);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown state family");
}

}  // namespace triloc
