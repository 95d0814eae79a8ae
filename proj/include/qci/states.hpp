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

#ifndef QCI_STATES_HPP
#define QCI_STATES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qci/matrix.hpp"

namespace qci {

/// Eigenvalues at or below this are treated as zero when purifying.
inline constexpr double kPurifyCutoff = 1e-12;

/// Hermitian, positive semidefinite, unit-trace operator with a factor shape.
/// Only obtainable through make_density, so every instance is validated.
class DensityMatrix {
 public:
  const Matrix& matrix() const noexcept { return mat_; }
  const FactorShape& shape() const noexcept { return shape_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  double tol() const noexcept { return tol_; }

 private:
  friend DensityMatrix make_density(const Matrix& m, FactorShape shape, double tol);
  DensityMatrix(Matrix m, FactorShape shape, double tol)
      : mat_(std::move(m)), shape_(std::move(shape)), tol_(tol) {}

  Matrix mat_;
  FactorShape shape_;
  double tol_;
};

/// Validation gate. Checks, in order: squareness and shape, Hermiticity,
/// trace, positivity. Each failure is a ValidationError carrying the
/// offending quantity. The stored matrix is the Hermitian part of `m`.
DensityMatrix make_density(const Matrix& m, FactorShape shape, double tol = kDefaultTol);
/// Single-factor shape [dim].
DensityMatrix make_density(const Matrix& m, double tol = kDefaultTol);

/// Marginal on the listed factors.
DensityMatrix reduce(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix reduce(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Same operator with factors reordered (see permute_factors).
DensityMatrix permute_factors(const DensityMatrix& rho, std::span<const std::size_t> order);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

class PureState {
 public:
  const Vector& vec() const noexcept { return vec_; }
  const FactorShape& shape() const noexcept { return shape_; }
  std::size_t dim() const noexcept { return vec_.size(); }
  /// |v><v| as a validated density matrix with the same shape.
  DensityMatrix density() const;

 private:
  friend PureState make_pure(Vector v, FactorShape shape, double tol);
  PureState(Vector v, FactorShape shape) : vec_(std::move(v)), shape_(std::move(shape)) {}

  Vector vec_;
  FactorShape shape_;
};

/// Throws ValidationError(normalization) if | ||v|| - 1 | > tol.
PureState make_pure(Vector v, FactorShape shape, double tol = 1e-12);
PureState make_pure(Vector v, double tol = 1e-12);
/// Computational basis vector |index> in dimension dim.
PureState basis_state(std::size_t dim, std::size_t index);

/// Labelling freedom of a purification: eigenvector j of rho is paired with
/// reference basis vector reference_order[j] and multiplied by
/// exp(i * phases[j]). Empty members mean identity order / zero phases.
struct PurificationFrame {
  std::vector<std::size_t> reference_order;
  std::vector<double> phases;
};

/// |u> = sum_j sqrt(l_j) |x_j> (x) |l_j> on H_A (x) H_B with the reference
/// factor first and dim(H_A) = dim(rho). Shape is [d, d]. Eigenvalues at or
/// below kPurifyCutoff are dropped and the result renormalized.
PureState purify(const DensityMatrix& rho);
PureState purify(const DensityMatrix& rho, const PurificationFrame& frame);

/// Seeded pseudo-random source. The stream depends only on the seed:
/// mt19937_64 words, 53-bit uniforms and Box-Muller normals are all computed
/// here rather than by the implementation-defined <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double normal();
  /// Standard complex normal, E|z|^2 = 1.
  cplx complex_normal();
  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::optional<double> spare_;
};

/// Haar-distributed unitary: complex Ginibre matrix orthonormalized column
/// by column, which is a QR with positive diagonal in R.
Matrix haar_unitary(std::size_t dim, Rng& rng);

/// Uniformly random unit vector.
PureState random_pure_state(std::size_t dim, Rng& rng);

/// Tr_2 of a Haar-random pure state on C^dim (x) C^rank.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);

/// (1/2) sum |eig(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace qci

#endif  // QCI_STATES_HPP
