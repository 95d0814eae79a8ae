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

// Hand-built instances shared by the unit tests and the acceptance driver.

#ifndef QCI_TESTS_FIXTURES_HPP
#define QCI_TESTS_FIXTURES_HPP

#include <vector>

#include "qci/saturation.hpp"

namespace qci::testing {

/// rho_L (x) |psi><psi|_RC with B = (L, R), conjugated by V (x) 1 for a Haar
/// V on H_B. Shape [d_L * d_R, d_C].
struct StructuredBc {
  DensityMatrix rho_bc;
  std::size_t d_L, d_R, d_C;
};

inline StructuredBc structured_bc(std::size_t d_L, std::size_t d_R, std::size_t d_C, Rng& rng,
                                  bool conjugate = true) {
  const DensityMatrix rho_l = random_density(d_L, d_L, rng);
  const PureState psi = random_pure_state(d_R * d_C, rng);
  // Reorder L (x) (R C) directly: the product is already L, R, C in order.
  const Matrix prod = kron(rho_l.matrix(), psi.density().matrix());
  const std::size_t d_b = d_L * d_R;
  const Matrix v = conjugate ? haar_unitary(d_b, rng) : Matrix::identity(d_b);
  const Matrix vc = kron(v, Matrix::identity(d_C));
  return {make_density(vc * prod * vc.adjoint(), FactorShape{d_b, d_C}), d_L, d_R, d_C};
}

/// Two blocks on H_B = C^4 = span{e0,e1} (+) span{e2,e3}:
///   block 0: d_L = 1, d_R = 2;   block 1: d_L = 2, d_R = 1.
/// A and C are qubits.
struct SsaFixture {
  SsaDecomposition decomp;
  DensityMatrix rho_abc;
};

/// Weights (0.3, 0.7). The state is written entry by entry from the block
/// data, independently of qci::assemble.
inline SsaFixture two_block_ssa_fixture(std::uint64_t seed = 2024) {
  Rng rng(seed);
  constexpr std::size_t d_a = 2, d_b = 4, d_c = 2;
  struct Raw {
    std::size_t d_L, d_R, offset;
    DensityMatrix al, rc;
  };
  std::vector<Raw> raw;
  raw.push_back({1, 2, 0, random_density(d_a * 1, 2, rng), random_density(2 * d_c, 3, rng)});
  raw.push_back({2, 1, 2, random_density(d_a * 2, 3, rng), random_density(1 * d_c, 2, rng)});
  const double weights[2] = {0.3, 0.7};

  Matrix rho(d_a * d_b * d_c, d_a * d_b * d_c);
  SsaDecomposition decomp;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const Raw& b = raw[j];
    const std::size_t n = b.d_L * b.d_R;
    Matrix emb(d_b, n);
    for (std::size_t t = 0; t < n; ++t) emb(b.offset + t, t) = 1.0;
    for (std::size_t a = 0; a < d_a; ++a)
      for (std::size_t l = 0; l < b.d_L; ++l)
        for (std::size_t r = 0; r < b.d_R; ++r)
          for (std::size_t c = 0; c < d_c; ++c)
            for (std::size_t a2 = 0; a2 < d_a; ++a2)
              for (std::size_t l2 = 0; l2 < b.d_L; ++l2)
                for (std::size_t r2 = 0; r2 < b.d_R; ++r2)
                  for (std::size_t c2 = 0; c2 < d_c; ++c2) {
                    const std::size_t bi = b.offset + l * b.d_R + r;
                    const std::size_t bj = b.offset + l2 * b.d_R + r2;
                    rho((a * d_b + bi) * d_c + c, (a2 * d_b + bj) * d_c + c2) +=
                        weights[j] * b.al.matrix()(a * b.d_L + l, a2 * b.d_L + l2) *
                        b.rc.matrix()(r * d_c + c, r2 * d_c + c2);
                  }
    decomp.blocks.push_back({weights[j], b.d_L, b.d_R, emb, b.al, b.rc});
  }
  return {decomp, make_density(rho, FactorShape{d_a, d_b, d_c})};
}

}  // namespace qci::testing

#endif  // QCI_TESTS_FIXTURES_HPP
