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

#ifndef QCI_ENTROPY_HPP
#define QCI_ENTROPY_HPP

#include <optional>
#include <span>
#include <string_view>

#include "qci/channels.hpp"
#include "qci/states.hpp"

namespace qci {

/// Eigenvalues at or below this contribute nothing (0 log 0 = 0).
inline constexpr double kEntropyFloor = 1e-12;

/// -sum l log2 l over the given spectrum.
double entropy_of_spectrum(std::span<const double> eigenvalues);
/// Von Neumann entropy in bits.
double vn_entropy(const DensityMatrix& rho);

enum class CoherentInfoMethod {
  purification,   // S(Phi(rho)) - S((1 (x) Phi)(|u><u|))
  complementary,  // S(Phi(rho)) - S(complementary(Phi, rho))
};

std::string_view to_string(CoherentInfoMethod m);
std::optional<CoherentInfoMethod> parse_method(std::string_view name);

/// All entropies in bits. coherent_info is exactly
/// s_output - s_joint_or_exchange and gap_to_bound is s_rho - coherent_info.
struct EntropyReport {
  double s_rho = 0.0;
  double s_output = 0.0;
  double s_joint_or_exchange = 0.0;
  double coherent_info = 0.0;
  double gap_to_bound = 0.0;
  CoherentInfoMethod method = CoherentInfoMethod::purification;
};

/// Coherent information of rho through an endomorphic channel.
EntropyReport coherent_info(const DensityMatrix& rho, const KrausChannel& phi,
                            CoherentInfoMethod method = CoherentInfoMethod::purification);

/// S(rho_BC) - |S(rho_B) - S(rho_C)| for a two-factor state.
double check_araki_lieb(const DensityMatrix& rho_bc);

/// S(rho_AB) + S(rho_BC) - S(rho_ABC) - S(rho_B) for a three-factor state.
double check_ssa(const DensityMatrix& rho_abc);

}  // namespace qci

#endif  // QCI_ENTROPY_HPP
