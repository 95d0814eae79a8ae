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

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qci;
using namespace qci::testing;

TEST(kron, identity_times_identity) {
  EXPECT_EQ(max_abs_diff(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4)), 0.0);
}

TEST(kron, scalar_factor) {
  const Matrix one = Matrix::from_rows({{1.0}});
  EXPECT_EQ(max_abs_diff(kron(pauli_x(), one), pauli_x()), 0.0);
}

TEST(kron, diagonal_expansion) {
  const std::vector<double> a{1, 2}, b{3, 4}, ab{3, 4, 6, 8};
  EXPECT_EQ(max_abs_diff(kron(Matrix::diagonal(a), Matrix::diagonal(b)), Matrix::diagonal(ab)), 0.0);
}

TEST(kron, associative_on_random_inputs) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(2, 3, rng), b = random_matrix(3, 2, rng), c = random_matrix(2, 2, rng);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
  }
}

TEST(partial_trace, product_input) {
  Rng rng(3);
  const Matrix rho = random_density(2, 2, rng).matrix();
  const Matrix sigma = random_matrix(3, 3, rng);
  const Matrix expected = rho * sigma.trace();
  EXPECT_LE(max_abs_diff(partial_trace(kron(rho, sigma), FactorShape{2, 3}, {0}), expected), 1e-12);
}

TEST(partial_trace, bell_marginal_is_maximally_mixed) {
  const Matrix bell = bell_state().matrix();
  // Direct sum over the traced factor's computational basis.
  Matrix oracle(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t t = 0; t < 2; ++t) oracle(i, j) += bell(i * 2 + t, j * 2 + t);
  const Matrix got = partial_trace(bell, FactorShape{2, 2}, {0});
  EXPECT_LE(max_abs_diff(got, oracle), 1e-15);
  EXPECT_LE(max_abs_diff(got, Matrix::identity(2) * 0.5), 1e-15);
}

TEST(partial_trace, keep_everything_is_identity_map) {
  Rng rng(5);
  const Matrix m = random_matrix(4, 4, rng);
  EXPECT_EQ(max_abs_diff(partial_trace(m, FactorShape{4}, {0}), m), 0.0);
}

TEST(partial_trace, preserves_trace_and_is_linear) {
  Rng rng(7);
  const FactorShape shape{2, 3, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(12, 12, rng), b = random_matrix(12, 12, rng);
    const Matrix ra = partial_trace(a, shape, {0, 2});
    EXPECT_LE(std::abs(ra.trace() - a.trace()), 1e-12);
    const cplx alpha{0.3, -1.2};
    const Matrix lhs = partial_trace(a + b * alpha, shape, {1});
    const Matrix rhs = partial_trace(a, shape, {1}) + partial_trace(b, shape, {1}) * alpha;
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
  }
}

TEST(partial_trace, composes) {
  Rng rng(9);
  const FactorShape shape{2, 3, 2};
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_matrix(12, 12, rng);
    const Matrix once = partial_trace(m, shape, {0});
    const Matrix step = partial_trace(partial_trace(m, shape, {0, 1}), FactorShape{2, 3}, {0});
    EXPECT_LE(max_abs_diff(once, step), 1e-12);
  }
}

TEST(partial_trace, rejects_bad_shapes) {
  const Matrix m = Matrix::identity(4);
  EXPECT_THROW(partial_trace(m, FactorShape{2, 3}, {0}), DimensionError);
  EXPECT_THROW(partial_trace(m, FactorShape{2, 2}, {2}), DimensionError);
  EXPECT_THROW(partial_trace(m, FactorShape{2, 2}, {0, 0}), DimensionError);
  EXPECT_THROW(partial_trace(m, FactorShape{2, 2}, std::span<const std::size_t>{}), DimensionError);
}

TEST(permute_factors, swap_matches_kron_order) {
  Rng rng(13);
  const Matrix a = random_matrix(2, 2, rng), b = random_matrix(3, 3, rng);
  const std::vector<std::size_t> order{1, 0};
  EXPECT_LE(max_abs_diff(permute_factors(kron(a, b), FactorShape{2, 3}, order), kron(b, a)), 1e-15);
}

TEST(eigh, identity) {
  const auto e = eigh(Matrix::identity(2));
  EXPECT_DOUBLE_EQ(e.values[0], 1.0);
  EXPECT_DOUBLE_EQ(e.values[1], 1.0);
  EXPECT_LE(isometry_deviation(e.vectors), 1e-15);
}

TEST(eigh, diagonal_is_sorted_descending) {
  const std::vector<double> d{0.2, 0.8};
  const auto e = eigh(Matrix::diagonal(d));
  EXPECT_DOUBLE_EQ(e.values[0], 0.8);
  EXPECT_DOUBLE_EQ(e.values[1], 0.2);
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 1)), 1.0, 1e-15);
}

TEST(eigh, pauli_x_gives_hadamard_columns) {
  const auto e = eigh(pauli_x());
  EXPECT_NEAR(e.values[0], 1.0, 1e-14);
  EXPECT_NEAR(e.values[1], -1.0, 1e-14);
  const double h = 1.0 / std::sqrt(2.0);
  const Vector plus{h, h}, minus{h, -h};
  EXPECT_NEAR(std::abs(inner(plus, e.vectors.col(0))), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(inner(minus, e.vectors.col(1))), 1.0, 1e-14);
}

TEST(eigh, reconstructs_random_hermitian) {
  Rng rng(17);
  for (std::size_t n = 1; n <= 16; ++n) {
    const Matrix h = random_hermitian(n, rng);
    const auto e = eigh(h);
    const Matrix rebuilt = e.vectors * Matrix::diagonal(e.values) * e.vectors.adjoint();
    EXPECT_LE(max_abs_diff(rebuilt, h), 1e-10) << "n = " << n;
    EXPECT_LE(isometry_deviation(e.vectors), 1e-12) << "n = " << n;
    EXPECT_TRUE(std::is_sorted(e.values.rbegin(), e.values.rend()));
  }
}

TEST(eigh, agrees_with_independent_solver) {
  Rng rng(19);
  for (std::size_t n : {3u, 8u, 32u, 64u}) {
    const Matrix h = random_hermitian(n, rng);
    const auto e = eigh(h);
    const auto oracle = oracle_spectrum(h);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(e.values[i], oracle[i], 1e-10);
  }
}

TEST(eigh, degenerate_and_rank_deficient) {
  Rng rng(23);
  const Matrix u = haar_unitary(6, rng);
  const std::vector<double> d{0.5, 0.5, 0.0, 0.0, 0.0, 0.0};
  const Matrix h = u * Matrix::diagonal(d) * u.adjoint();
  const auto e = eigh(h);
  EXPECT_NEAR(e.values[0], 0.5, 1e-14);
  EXPECT_NEAR(e.values[1], 0.5, 1e-14);
  EXPECT_NEAR(e.values[5], 0.0, 1e-14);
  EXPECT_LE(max_abs_diff(e.vectors * Matrix::diagonal(e.values) * e.vectors.adjoint(), h), 1e-13);
}

TEST(eigh, rejects_non_hermitian) {
  const Matrix m = Matrix::from_rows({{1.0, 0.5}, {0.0, 1.0}});
  try {
    eigh(m);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationKind::hermiticity);
    EXPECT_DOUBLE_EQ(e.value(), 0.5);
  }
}

TEST(complete_to_unitary, first_basis_column) {
  const Matrix v = Matrix::column(Vector{1.0, 0.0});
  const Matrix u = complete_to_unitary(v);
  EXPECT_LE(isometry_deviation(u), 1e-15);
  EXPECT_EQ(u(0, 0), cplx(1.0));
  EXPECT_EQ(u(1, 0), cplx(0.0));
}

TEST(complete_to_unitary, full_unitary_is_unchanged) {
  Rng rng(29);
  const Matrix w = haar_unitary(4, rng);
  EXPECT_EQ(max_abs_diff(complete_to_unitary(w), w), 0.0);
}

TEST(complete_to_unitary, plus_state_column) {
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix v = Matrix::column(Vector{h, h});
  const Matrix u = complete_to_unitary(v);
  EXPECT_LE(isometry_deviation(u), 1e-12);
  EXPECT_EQ(u(0, 0), cplx(h));
  EXPECT_EQ(u(1, 0), cplx(h));
}

TEST(complete_to_unitary, random_isometries) {
  Rng rng(31);
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t k = 1; k <= n; k += 2) {
      const Matrix w = haar_unitary(n, rng);
      Matrix v(n, k);
      for (std::size_t j = 0; j < k; ++j) v.set_col(j, w.col(j));
      const Matrix u = complete_to_unitary(v);
      EXPECT_LE(isometry_deviation(u), 1e-10);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(u(i, j), v(i, j));
    }
}

TEST(complete_to_unitary, rejects_non_isometry) {
  const Matrix v = Matrix::column(Vector{1.0, 1.0});
  try {
    complete_to_unitary(v);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationKind::isometry);
    EXPECT_NEAR(e.value(), 1.0, 1e-15);
  }
}

TEST(Matrix, rejects_non_finite_entries) {
  EXPECT_THROW(Matrix(1, 1, {cplx(std::nan(""), 0.0)}), ValidationError);
  EXPECT_THROW(Matrix(2, 2, {1.0, 2.0}), DimensionError);
}
