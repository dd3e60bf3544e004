#pragma once

#include <array>
#include <vector>

#include "triloc/cmatrix.hpp"

namespace triloc {

/// Tolerance used to accept a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Ascending eigenvalues of a Hermitian matrix.
///
/// Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]]; every
/// eigenvalue of M appears twice in the embedding and the pair is averaged.
/// Iterates until the off-diagonal Frobenius norm drops below 1e-13 (relative
/// to the matrix norm when that exceeds one).
///
/// Throws Error{NonSquare} or Error{NonHermitianInput}.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Ascending eigenvalues of a real symmetric matrix stored row-major (n x n).
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Eigenvalues and orthonormal eigenvectors (columns of `vectors`, row-major
/// n x n) of a real symmetric matrix, ascending.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<double> vectors;
};
SymmetricEigen symmetric_eigen(std::vector<double> a, std::size_t n);

/// Eigen-decomposition of a Hermitian matrix: ascending values, eigenvectors
/// as columns of a unitary.
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};
HermitianEigen hermitian_eigen(const CMatrix& m);

}  // namespace triloc
