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

#include "qci/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qci {

DensityMatrix make_density(const Matrix& m, FactorShape shape, double tol) {
  if (!m.is_square()) throw DimensionError("density matrix must be square");
  check_shape(shape, m.rows());

  const double asym = hermiticity_deviation(m);
  if (asym > tol) {
    std::ostringstream os;
    os << "density matrix not Hermitian (max asymmetry " << asym << ")";
    throw ValidationError(ValidationKind::hermiticity, asym, os.str());
  }
  Matrix h = hermitian_part(m);

  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream os;
    os << "density matrix trace is " << tr << ", expected 1";
    throw ValidationError(ValidationKind::trace, tr, os.str());
  }

  const auto eig = eigh(h, tol);
  const double min_eig = eig.values.empty() ? 0.0 : eig.values.back();
  if (min_eig < -tol) {
    std::ostringstream os;
    os << "density matrix not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw ValidationError(ValidationKind::positivity, min_eig, os.str());
  }
  return DensityMatrix(std::move(h), std::move(shape), tol);
}

DensityMatrix make_density(const Matrix& m, double tol) {
  return make_density(m, FactorShape{m.rows()}, tol);
}

DensityMatrix reduce(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> dims;
  for (auto f : sorted) {
    if (f >= rho.shape().arity()) throw DimensionError("reduce: factor index out of range");
    dims.push_back(rho.shape().dims[f]);
  }
  Matrix m = partial_trace(rho.matrix(), rho.shape(), sorted);
  return make_density(m, FactorShape(std::move(dims)), rho.tol());
}

DensityMatrix reduce(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return reduce(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

DensityMatrix permute_factors(const DensityMatrix& rho, std::span<const std::size_t> order) {
  Matrix m = permute_factors(rho.matrix(), rho.shape(), order);
  std::vector<std::size_t> dims;
  for (auto f : order) dims.push_back(rho.shape().dims[f]);
  return make_density(m, FactorShape(std::move(dims)), rho.tol());
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.shape().dims;
  dims.insert(dims.end(), b.shape().dims.begin(), b.shape().dims.end());
  return make_density(kron(a.matrix(), b.matrix()), FactorShape(std::move(dims)),
                      std::max(a.tol(), b.tol()));
}

DensityMatrix PureState::density() const {
  return make_density(outer(vec_, vec_), shape_);
}

PureState make_pure(Vector v, FactorShape shape, double tol) {
  check_shape(shape, v.size());
  const double nrm = vector_norm(v);
  if (!std::isfinite(nrm) || std::abs(nrm - 1.0) > tol) {
    std::ostringstream os;
    os << "pure state norm is " << nrm << ", expected 1";
    throw ValidationError(ValidationKind::normalization, nrm, os.str());
  }
  return PureState(std::move(v), std::move(shape));
}

PureState make_pure(Vector v, double tol) {
  const std::size_t n = v.size();
  return make_pure(std::move(v), FactorShape{n}, tol);
}

PureState basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis_state: index out of range");
  Vector v(dim, 0.0);
  v[index] = 1.0;
  return make_pure(std::move(v));
}

PureState purify(const DensityMatrix& rho) { return purify(rho, PurificationFrame{}); }

PureState purify(const DensityMatrix& rho, const PurificationFrame& frame) {
  const std::size_t d = rho.dim();
  std::vector<std::size_t> order = frame.reference_order;
  if (order.empty()) {
    order.resize(d);
    for (std::size_t j = 0; j < d; ++j) order[j] = j;
  }
  if (order.size() != d) throw DimensionError("purify: reference order has wrong length");
  {
    std::vector<bool> seen(d, false);
    for (auto r : order) {
      if (r >= d || seen[r]) throw DimensionError("purify: reference order is not a permutation");
      seen[r] = true;
    }
  }
  if (!frame.phases.empty() && frame.phases.size() != d) {
    throw DimensionError("purify: phase list has wrong length");
  }

  const auto eig = eigh(rho.matrix(), rho.tol());
  Vector u(d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    const double lam = eig.values[j];
    if (lam <= kPurifyCutoff) continue;
    const cplx phase = frame.phases.empty() ? cplx{1.0} : std::polar(1.0, frame.phases[j]);
    const cplx amp = std::sqrt(lam) * phase;
    const std::size_t a = order[j];
    for (std::size_t b = 0; b < d; ++b) u[a * d + b] += amp * eig.vectors(b, j);
  }
  const double nrm = vector_norm(u);
  for (auto& z : u) z /= nrm;
  return make_pure(std::move(u), FactorShape{d, d});
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  return r * std::cos(t);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw DimensionError("Rng::below: empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

Matrix haar_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionError("haar_unitary: dim must be positive");
  Matrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();

  // Modified Gram-Schmidt with one reorthogonalization pass; R's diagonal
  // is the positive column norm, so no extra phase correction is needed.
  Matrix q(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vector x = g.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        const Vector qk = q.col(k);
        const cplx c = inner(qk, x);
        for (std::size_t i = 0; i < dim; ++i) x[i] -= c * qk[i];
      }
    const double nx = vector_norm(x);
    for (auto& z : x) z /= nx;
    q.set_col(j, x);
  }
  return q;
}

PureState random_pure_state(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionError("random_pure_state: dim must be positive");
  Vector v(dim);
  for (auto& z : v) z = rng.complex_normal();
  const double n = vector_norm(v);
  for (auto& z : v) z /= n;
  return make_pure(std::move(v));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw ValidationError(ValidationKind::range, static_cast<double>(rank),
                          "random_density: rank must lie in [1, dim]");
  }
  const PureState psi = random_pure_state(dim * rank, rng);
  Matrix m = partial_trace(outer(psi.vec(), psi.vec()), FactorShape{dim, rank}, {0});
  return make_density(m);
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_distance: dimension mismatch");
  }
  const auto eig = eigh(hermitian_part(a - b));
  double s = 0.0;
  for (double l : eig.values) s += std::abs(l);
  return 0.5 * s;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  return trace_distance(a.matrix(), b.matrix());
}

}  // namespace qci
