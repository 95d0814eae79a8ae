// Copyright 2026 The qci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex matrix kernel.
//
// Storage is row-major. Tensor products follow the convention that the
// leftmost factor is the most significant digit of the flat index:
//   i = i_0 * (d_1 * d_2 * ...) + i_1 * (d_2 * ...) + ... + i_{n-1}
// Every routine in the library relies on this ordering.

#ifndef QCI_MATRIX_HPP
#define QCI_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qci/error.hpp"

namespace qci {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

/// Default tolerance used by validation gates.
inline constexpr double kDefaultTol = 1e-10;

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes row-major entries; throws on a size mismatch or non-finite entry.
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);
  static Matrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  /// Single column holding `v`.
  static Matrix column(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  Vector col(std::size_t c) const;
  void set_col(std::size_t c, std::span<const cplx> v);

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  /// Frobenius norm.
  double norm() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Ordered subsystem dimensions annotating a square matrix or a vector.
struct FactorShape {
  std::vector<std::size_t> dims;

  FactorShape() = default;
  FactorShape(std::initializer_list<std::size_t> d) : dims(d) {}
  explicit FactorShape(std::vector<std::size_t> d) : dims(std::move(d)) {}

  std::size_t arity() const noexcept { return dims.size(); }
  std::size_t total() const noexcept;
  bool operator==(const FactorShape&) const = default;
};

/// Throws DimensionError unless all dims are positive and multiply to `n`.
void check_shape(const FactorShape& shape, std::size_t n);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(std::span<const cplx> a, std::span<const cplx> b);

Vector matvec(const Matrix& m, std::span<const cplx> v);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // <a|b>
double vector_norm(std::span<const cplx> v);
/// |a><b|
Matrix outer(std::span<const cplx> a, std::span<const cplx> b);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
/// Largest entry of |m - m^dagger|.
double hermiticity_deviation(const Matrix& m);
/// Largest entry of |v^dagger v - I|.
double isometry_deviation(const Matrix& v);
/// (m + m^dagger) / 2
Matrix hermitian_part(const Matrix& m);

/// Reduced operator on the factors listed in `keep` (factor order preserved,
/// duplicates rejected).
Matrix partial_trace(const Matrix& m, const FactorShape& shape,
                     std::span<const std::size_t> keep);
Matrix partial_trace(const Matrix& m, const FactorShape& shape,
                     std::initializer_list<std::size_t> keep);

/// Reorders tensor factors: factor p of the result is factor order[p] of `m`.
Matrix permute_factors(const Matrix& m, const FactorShape& shape,
                       std::span<const std::size_t> order);
Vector permute_factors(std::span<const cplx> v, const FactorShape& shape,
                       std::span<const std::size_t> order);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column j pairs with values[j]
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Throws ValidationError(hermiticity) when max|h - h^dagger| > tol.
EigenDecomposition eigh(const Matrix& h, double tol = kDefaultTol);

/// Extends an isometry (orthonormal columns) to a square unitary whose first
/// v.cols() columns are v itself.
Matrix complete_to_unitary(const Matrix& v, double tol = kDefaultTol);

}  // namespace qci

#endif  // QCI_MATRIX_HPP
