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

#include "qci/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qci {

const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::non_finite: return "non-finite";
    case ValidationKind::hermiticity: return "hermiticity";
    case ValidationKind::positivity: return "positivity";
    case ValidationKind::trace: return "trace";
    case ValidationKind::normalization: return "normalization";
    case ValidationKind::isometry: return "isometry";
    case ValidationKind::completeness: return "completeness";
    case ValidationKind::weights: return "weights";
    case ValidationKind::orthogonality: return "orthogonality";
    case ValidationKind::range: return "range";
    case ValidationKind::inequality: return "inequality";
  }
  return "unknown";
}

namespace {

std::string dims_str(std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

void require_same_size(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": size mismatch " +
                         dims_str(a.rows(), a.cols()) + " vs " +
                         dims_str(b.rows(), b.cols()));
  }
}

// Flat-index strides for a factor list, leftmost factor most significant.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

// Full-space offsets contributed by every multi-index over the listed
// factors, enumerated in the listed order (first listed is most significant).
std::vector<std::size_t> offsets_over(const std::vector<std::size_t>& dims,
                                      const std::vector<std::size_t>& strides,
                                      const std::vector<std::size_t>& factors) {
  std::size_t count = 1;
  for (auto f : factors) count *= dims[f];
  std::vector<std::size_t> out(count, 0);
  std::vector<std::size_t> digit(factors.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) off += digit[k] * strides[factors[k]];
    out[n] = off;
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digit[k] < dims[factors[k]]) break;
      digit[k] = 0;
    }
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("Matrix: " + std::to_string(data_.size()) +
                         " entries for shape " + dims_str(rows, cols));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError(ValidationKind::non_finite, 0.0,
                            "Matrix: non-finite entry");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cplx> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("Matrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::column(std::span<const cplx> v) {
  return Matrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, std::span<const cplx> v) {
  if (v.size() != rows_) throw DimensionError("Matrix::set_col: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix is " + dims_str(rows_, cols_));
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_size(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_size(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + dims_str(a.rows(), a.cols()) + " * " +
                         dims_str(b.rows(), b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::size_t FactorShape::total() const noexcept {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

void check_shape(const FactorShape& shape, std::size_t n) {
  if (shape.dims.empty()) throw DimensionError("factor shape is empty");
  for (auto d : shape.dims) {
    if (d == 0) throw DimensionError("factor shape has a zero dimension");
  }
  if (shape.total() != n) {
    throw DimensionError("factor shape multiplies to " + std::to_string(shape.total()) +
                         ", expected " + std::to_string(n));
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Vector kron(std::span<const cplx> a, std::span<const cplx> b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  return out;
}

Vector matvec(const Matrix& m, std::span<const cplx> v) {
  if (m.cols() != v.size()) throw DimensionError("matvec: length mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vector_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Matrix outer(std::span<const cplx> a, std::span<const cplx> b) {
  Matrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

double max_abs(const Matrix& m) {
  double mx = 0.0;
  for (const auto& z : m.entries()) mx = std::max(mx, std::abs(z));
  return mx;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_size(a, b, "max_abs_diff");
  double mx = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    mx = std::max(mx, std::abs(a.entries()[i] - b.entries()[i]));
  return mx;
}

double hermiticity_deviation(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("hermiticity check on non-square matrix");
  double mx = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
  return mx;
}

double isometry_deviation(const Matrix& v) {
  return max_abs_diff(v.adjoint() * v, Matrix::identity(v.cols()));
}

Matrix hermitian_part(const Matrix& m) {
  return (m + m.adjoint()) * cplx{0.5};
}

Matrix partial_trace(const Matrix& m, const FactorShape& shape,
                     std::span<const std::size_t> keep) {
  if (!m.is_square()) throw DimensionError("partial_trace: matrix not square");
  check_shape(shape, m.rows());
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::vector<bool> kept(shape.arity(), false);
  for (auto f : keep) {
    if (f >= shape.arity()) throw DimensionError("partial_trace: factor index out of range");
    if (kept[f]) throw DimensionError("partial_trace: duplicate factor index");
    kept[f] = true;
  }
  std::vector<std::size_t> keep_list, traced_list;
  for (std::size_t f = 0; f < shape.arity(); ++f) (kept[f] ? keep_list : traced_list).push_back(f);

  const auto strides = strides_of(shape.dims);
  const auto kept_off = offsets_over(shape.dims, strides, keep_list);
  const auto traced_off = offsets_over(shape.dims, strides, traced_list);

  const std::size_t n = kept_off.size();
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (auto t : traced_off) s += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = s;
    }
  return out;
}

Matrix partial_trace(const Matrix& m, const FactorShape& shape,
                     std::initializer_list<std::size_t> keep) {
  return partial_trace(m, shape, std::span<const std::size_t>(keep.begin(), keep.size()));
}

namespace {

std::vector<std::size_t> permutation_map(const FactorShape& shape,
                                         std::span<const std::size_t> order) {
  if (order.size() != shape.arity()) throw DimensionError("permute_factors: order has wrong length");
  std::vector<bool> seen(shape.arity(), false);
  for (auto f : order) {
    if (f >= shape.arity() || seen[f]) throw DimensionError("permute_factors: order is not a permutation");
    seen[f] = true;
  }
  const auto strides = strides_of(shape.dims);
  return offsets_over(shape.dims, strides, std::vector<std::size_t>(order.begin(), order.end()));
}

}  // namespace

Matrix permute_factors(const Matrix& m, const FactorShape& shape,
                       std::span<const std::size_t> order) {
  if (!m.is_square()) throw DimensionError("permute_factors: matrix not square");
  check_shape(shape, m.rows());
  const auto map = permutation_map(shape, order);
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < map.size(); ++j) out(i, j) = m(map[i], map[j]);
  return out;
}

Vector permute_factors(std::span<const cplx> v, const FactorShape& shape,
                       std::span<const std::size_t> order) {
  check_shape(shape, v.size());
  const auto map = permutation_map(shape, order);
  Vector out(v.size());
  for (std::size_t i = 0; i < map.size(); ++i) out[i] = v[map[i]];
  return out;
}

EigenDecomposition eigh(const Matrix& h, double tol) {
  if (!h.is_square()) throw DimensionError("eigh: matrix not square");
  const double asym = hermiticity_deviation(h);
  if (asym > tol) {
    std::ostringstream os;
    os << "eigh: matrix not Hermitian (max asymmetry " << asym << ")";
    throw ValidationError(ValidationKind::hermiticity, asym, os.str());
  }
  const std::size_t n = h.rows();
  Matrix a = hermitian_part(h);
  Matrix v = Matrix::identity(n);

  const double frob = a.norm();
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-16 * frob || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Entries already below roundoff of both diagonals are dropped.
        if (sweep > 3 && mag < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Phase e removes the argument of a_pq, then a real rotation
        // annihilates it. G = diag(1, e) * [[c, s], [-s, c]] on (p, q).
        const cplx e = std::conj(apq) / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx g_pp = c, g_pq = s, g_qp = -s * e, g_qq = c * e;

        for (std::size_t k = 0; k < n; ++k) {  // a <- a G
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- G^dagger a
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // v <- v G
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(idx[j], idx[j]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, idx[j]);
  }
  return out;
}

Matrix complete_to_unitary(const Matrix& v, double tol) {
  if (v.rows() < v.cols()) {
    throw DimensionError("complete_to_unitary: more columns than rows");
  }
  const double dev = isometry_deviation(v);
  if (dev > tol) {
    std::ostringstream os;
    os << "complete_to_unitary: columns not orthonormal (max |v^dagger v - I| = " << dev << ")";
    throw ValidationError(ValidationKind::isometry, dev, os.str());
  }
  const std::size_t n = v.rows();
  Matrix u(n, n);
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    basis.push_back(v.col(j));
    u.set_col(j, basis.back());
  }

  auto project_out = [&basis](Vector& x) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const cplx c = inner(b, x);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * b[i];
      }
  };

  // Greedy: each new column comes from the standard basis vector with the
  // largest component outside the current span.
  for (std::size_t j = v.cols(); j < n; ++j) {
    Vector best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < n; ++e) {
      Vector x(n, 0.0);
      x[e] = 1.0;
      project_out(x);
      const double nx = vector_norm(x);
      if (nx > best_norm + 1e-12) {
        best_norm = nx;
        best = std::move(x);
      }
    }
    for (auto& z : best) z /= best_norm;
    project_out(best);
    const double renorm = vector_norm(best);
    for (auto& z : best) z /= renorm;
    basis.push_back(best);
    u.set_col(j, best);
  }
  return u;
}

}  // namespace qci
