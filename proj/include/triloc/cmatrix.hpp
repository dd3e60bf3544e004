#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace triloc {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for the 2x2..16x16 problems this
/// library deals with; no expression templates, no aliasing tricks.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
  /// Row-wise literal, e.g. CMatrix{{1, 0}, {0, -1}}.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix zeros(std::size_t n) { return CMatrix(n, n); }
  static CMatrix identity(std::size_t n);
  /// |v><v| for a column vector v.
  static CMatrix outer(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }

  CMatrix adjoint() const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max |M - M^dagger| over entries.
double hermiticity_defect(const CMatrix& m);

/// Pauli matrices, index 0 is the identity: sigma(1)=X, sigma(2)=Y, sigma(3)=Z.
const CMatrix& pauli(int index);

}  // namespace triloc
