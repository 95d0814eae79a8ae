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

// Saturation of the coherent-information bound I_c(rho, Phi) <= S(rho).
//
// The bound is attained exactly when the system-environment state
// Omega_BC = U (rho (x) |e><e|) U^dagger of a Stinespring dilation splits,
// after a unitary change of basis w on B, as
//
//     Omega_BC = rho_L (x) |psi><psi|_RC,      H_B = H_L (x) H_R.
//
// detect_product_pure_structure() extracts (w, rho_L, psi) from a state with
// vanishing Araki-Lieb gap S(BC) - (S(B) - S(C)). build_recovery() turns the
// factorization into the channel that undoes Phi on the purification of rho:
// discard R, prepare psi on R (x) C, rotate back through w and U^dagger, and
// drop the environment.

#ifndef QCI_SATURATION_HPP
#define QCI_SATURATION_HPP

#include <optional>
#include <vector>

#include "qci/channels.hpp"
#include "qci/entropy.hpp"
#include "qci/states.hpp"

namespace qci {

inline constexpr double kSaturationTol = 1e-7;
inline constexpr double kReconstructTol = 1e-7;
/// Eigenvalues of rho_C and rho_L at or below this are outside the support.
inline constexpr double kSupportCutoff = 1e-10;

struct SaturationCertificate {
  std::size_t d_L = 0;
  std::size_t d_R = 0;
  std::size_t d_C = 0;
  /// Columns are the images of |i>_L |k>_R, column index i * d_R + k.
  /// Square unitary unless support_only is set, then an isometry.
  Matrix w;
  DensityMatrix rho_L;
  PureState psi_RC;  // shape [d_R, d_C]
  /// Trace distance between reconstruct() and the analysed state.
  double residual = 0.0;
  /// No factorization d_L * d_R = dim(H_B) fits the detected support, so
  /// w covers only span{|l_i r_k>}.
  bool support_only = false;
};

/// (w (x) 1)(rho_L (x) |psi><psi|)(w (x) 1)^dagger on H_B (x) H_C.
Matrix reconstruct(const SaturationCertificate& cert);

/// Extracts the product/pure factorization of a two-factor state rho_BC.
///
/// The Araki-Lieb gap S(BC) - (S(B) - S(C)) is re-checked first and a
/// NotSaturatingError is thrown if it exceeds `tol`. Then, with rho_C =
/// sum mu_k |c_k><c_k| and conditional blocks B_kk' = <c_k| rho_BC |c_k'>
/// taken on the C factor:
///   B_00 / mu_0 = rho_L (x) |r_0><r_0|   gives lambda_i and |l_i r_0>,
///   B_k0 |l_i r_0> = lambda_i sqrt(mu_k mu_0) |l_i r_k>.
/// The |l_i r_k> columns are orthonormalized and completed to a full basis
/// of H_B (d_R = Schmidt rank of psi when it divides dim(H_B)). A residual
/// above reconstruct_tol raises StructureNotFoundError carrying it.
SaturationCertificate detect_product_pure_structure(const DensityMatrix& rho_bc,
                                                    double tol = kSaturationTol,
                                                    double reconstruct_tol = kReconstructTol);

struct SaturationCheck {
  EntropyReport report;
  /// S(rho) - I_c(rho, Phi).
  double gap = 0.0;
  std::optional<StinespringDilation> dilation;
  std::optional<SaturationCertificate> certificate;
  /// Trace distance between w^dagger Phi(rho) w and the product of its L and
  /// R marginals; present with a certificate.
  std::optional<double> product_output_distance;
  bool product_output = false;
};

/// Computes the gap and, when gap <= tol, analyses Omega_BC of the canonical
/// dilation. Detector errors propagate.
SaturationCheck check_coherent_saturation(const DensityMatrix& rho, const KrausChannel& phi,
                                          double tol = kSaturationTol,
                                          double reconstruct_tol = kReconstructTol);

struct SaturatingInstance {
  DensityMatrix rho;
  KrausChannel channel;
};

/// On H = H_L (x) H_R with a Haar basis change G:
///   Phi(s) = V_L Tr_R(G s G^dagger) V_L^dagger (x) |t><t|,
///   rho    = G^dagger (rho_L (x) |0><0|) G,
/// with Haar V_L, random pure t and random full-rank rho_L. Such pairs
/// attain I_c = S(rho).
SaturatingInstance random_saturating_instance(std::size_t d_L, std::size_t d_R, Rng& rng);

struct RecoveryChannel {
  StinespringDilation dilation;
  SaturationCertificate certificate;
  KrausChannel channel;
};

/// sigma -> Tr_C[ U^dagger (w (x) 1)(Tr_R(w^dagger sigma w) (x) |psi><psi|)(w (x) 1)^dagger U ]
/// as a Kraus family of d_R * d_C operators. Throws DimensionError when the
/// certificate does not fit the dilation or is support-only.
RecoveryChannel build_recovery(const StinespringDilation& dilation,
                               const SaturationCertificate& cert);

/// Trace distance between (1 (x) Psi o Phi)(|u><u|) and |u><u| for the
/// canonical purification u of rho.
double verify_recovery(const DensityMatrix& rho, const KrausChannel& phi,
                       const KrausChannel& psi);
double verify_recovery(const DensityMatrix& rho, const KrausChannel& phi,
                       const RecoveryChannel& psi);

struct SsaBlock {
  double weight = 0.0;
  std::size_t d_L = 0;
  std::size_t d_R = 0;
  /// dim(H_B) x (d_L * d_R) isometry onto this block of H_B.
  Matrix embedding;
  DensityMatrix rho_a_l;  // on H_A (x) H_{b_L}
  DensityMatrix rho_r_c;  // on H_{b_R} (x) H_C
};

struct SsaDecomposition {
  std::vector<SsaBlock> blocks;
};

/// Sum over blocks of weight * (1 (x) E (x) 1)(rho_a_l (x) rho_r_c)(...)^dagger.
Matrix assemble(const SsaDecomposition& decomp, std::size_t d_a, std::size_t d_b,
                std::size_t d_c);

/// Trace distance between rho_abc and the assembled decomposition. Rejects
/// weights that are not a probability distribution, non-isometric or
/// overlapping embeddings, and (as a consistency check) an assembled state
/// whose SSA gap exceeds 1e-8.
double verify_ssa_decomposition(const DensityMatrix& rho_abc, const SsaDecomposition& decomp);

}  // namespace qci

#endif  // QCI_SATURATION_HPP
