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

// Quantum channels in Kraus form.
//
// Factor conventions:
//  * choi(): input factor first, output factor second.
//  * stinespring(): system factor B first, environment C second; the
//    environment starts in |0>.
//  * purify() puts the reference first (A (x) B), so the extended channel
//    1 (x) Phi acts on factor 1. Expressions written with the reference last,
//    (Phi (x) 1)(|u><u|), are the same operator after swapping the two
//    factors with permute_factors(rho, {1, 0}).

#ifndef QCI_CHANNELS_HPP
#define QCI_CHANNELS_HPP

#include <vector>

#include "qci/matrix.hpp"
#include "qci/states.hpp"

namespace qci {

/// Kraus operators below this Choi eigenvalue are dropped by canonical_kraus.
inline constexpr double kKrausCutoff = 1e-12;

class KrausChannel {
 public:
  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
  std::size_t size() const noexcept { return kraus_.size(); }
  std::size_t d_in() const noexcept { return kraus_.front().cols(); }
  std::size_t d_out() const noexcept { return kraus_.front().rows(); }
  bool is_endomorphic() const noexcept { return d_in() == d_out(); }
  double tol() const noexcept { return tol_; }

 private:
  friend KrausChannel make_channel(std::vector<Matrix> kraus, double tol);
  KrausChannel(std::vector<Matrix> k, double tol) : kraus_(std::move(k)), tol_(tol) {}

  std::vector<Matrix> kraus_;
  double tol_;
};

/// Validates a Kraus family: non-empty, uniform sizes, and
/// max|sum M^dagger M - I| <= tol (ValidationError(completeness) otherwise).
KrausChannel make_channel(std::vector<Matrix> kraus, double tol = kDefaultTol);

/// sum_k M_k X M_k^dagger on an arbitrary operator.
Matrix apply(const KrausChannel& phi, const Matrix& x);
/// Phi(rho). Output keeps rho's shape when the channel is endomorphic,
/// otherwise has shape [d_out].
DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho);
/// (1 (x) ... Phi ... (x) 1)(rho) with Phi on factor `acting_factor`.
DensityMatrix apply_extended(const KrausChannel& phi, const DensityMatrix& rho,
                             std::size_t acting_factor);

/// sum_{ij} |i><j| (x) Phi(|i><j|).
Matrix choi(const KrausChannel& phi);

/// Kraus family read off the Choi eigendecomposition, one operator per
/// eigenvalue above kKrausCutoff. Operators are Hilbert-Schmidt orthogonal,
/// Tr(M_i^dagger M_j) = mu_i delta_ij, and the count equals the Choi rank.
KrausChannel canonical_kraus(const KrausChannel& phi);

/// Phi(rho) = Tr_C[U (rho (x) |e><e|) U^dagger] with U on H_B (x) H_C.
struct StinespringDilation {
  Matrix u;
  std::size_t sys_dim = 0;
  std::size_t env_dim = 0;
  PureState env_state;
};

/// Dilation built from the canonical Kraus form, so env_dim is the Choi
/// rank. The isometry x -> sum_k M_k x (x) |k> fills the columns of U with
/// environment index 0; the rest is an arbitrary unitary completion.
/// Throws UnsupportedError for non-endomorphic channels.
StinespringDilation stinespring(const KrausChannel& phi);

/// U (rho (x) |e><e|) U^dagger with shape [sys_dim, env_dim].
DensityMatrix dilate(const StinespringDilation& dil, const DensityMatrix& rho);
/// Tr_C of dilate().
DensityMatrix apply(const StinespringDilation& dil, const DensityMatrix& rho);

/// Complementary output, entries Tr(M_i rho M_j^dagger) over the canonical
/// Kraus operators. Its entropy equals that of (1 (x) Phi)(|u><u|).
DensityMatrix complementary(const KrausChannel& phi, const DensityMatrix& rho);

/// second o first, Kraus family {N_j M_k}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

KrausChannel identity_channel(std::size_t d);
/// Kraus {|i><i|}: keeps the diagonal.
KrausChannel dephasing_channel(std::size_t d);
/// Kraus {I, X, Y, Z} / 2: every qubit state goes to I/2.
KrausChannel completely_depolarizing_qubit();
/// Kraus operators are d x d blocks of the first d columns of a Haar unitary
/// on C^d (x) C^K.
KrausChannel random_channel(std::size_t d, std::size_t kraus_count, Rng& rng);

}  // namespace qci

#endif  // QCI_CHANNELS_HPP
