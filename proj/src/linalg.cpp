#include "triloc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "triloc/error.hpp"

namespace triloc {
namespace {

constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

// Cyclic Jacobi. `v`, when non-null, accumulates the rotations (columns are
// eigenvectors on return).
void jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* v) {
  if (v) {
    v->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*v)[i * n + i] = 1.0;
  }
  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double tol = kOffDiagonalTol * std::max(1.0, std::sqrt(frob));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= tol) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        if (v) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = (*v)[k * n + p];
            const double vkq = (*v)[k * n + q];
            (*v)[k * n + p] = c * vkp - s * vkq;
            (*v)[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
}

void check_hermitian(const CMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NonSquare, "eigenvalues of a non-square matrix");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol)
    throw Error(ErrorKind::NonHermitianInput, "hermiticity defect " + std::to_string(defect));
}

std::vector<double> embed(const CMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t n2 = 2 * n;
  std::vector<double> a(n2 * n2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Symmetrize so rounding-level defects do not leak into the embedding.
      const Complex h = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a[r * n2 + c] = h.real();
      a[(r + n) * n2 + (c + n)] = h.real();
      a[r * n2 + (c + n)] = -h.imag();
      a[(r + n) * n2 + c] = h.imag();
    }
  }
  return a;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw Error(ErrorKind::NonSquare, "symmetric_eigenvalues: size mismatch");
  jacobi(a, n, nullptr);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricEigen symmetric_eigen(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw Error(ErrorKind::NonSquare, "symmetric_eigen: size mismatch");
  std::vector<double> v;
  jacobi(a, n, &v);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  SymmetricEigen out{std::vector<double>(n), std::vector<double>(n * n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a[order[c] * n + order[c]];
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + c] = v[r * n + order[c]];
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  check_hermitian(m);
  const std::size_t n = m.rows();
  const auto doubled = symmetric_eigenvalues(embed(m), 2 * n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

HermitianEigen hermitian_eigen(const CMatrix& m) {
  check_hermitian(m);
  const std::size_t n = m.rows();
  const auto sym = symmetric_eigen(embed(m), 2 * n);
  const std::size_t n2 = 2 * n;

  // Each eigenvalue's 2-dim embedded eigenspace contains (Re v, Im v) and
  // (-Im v, Re v). Take one vector per pair, then Gram-Schmidt against what is
  // already chosen to keep a unitary even inside degenerate clusters.
  HermitianEigen out{std::vector<double>(n), CMatrix(n, n)};
  std::vector<std::vector<Complex>> basis;
  std::vector<double> values;
  for (std::size_t c = 0; c < n2 && basis.size() < n; ++c) {
    std::vector<Complex> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = Complex{sym.vectors[r * n2 + c], sym.vectors[(r + n) * n2 + c]};
    for (const auto& b : basis) {
      Complex overlap{0.0, 0.0};
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(b[r]) * v[r];
      for (std::size_t r = 0; r < n; ++r) v[r] -= overlap * b[r];
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (auto& x : v) x /= norm;
    basis.push_back(std::move(v));
    values.push_back(sym.values[c]);
  }
  if (basis.size() != n) throw Error(ErrorKind::InvariantViolation, "hermitian_eigen: lost rank in eigenbasis");
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = values[c];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = basis[c][r];
  }
  return out;
}

}  // namespace triloc
