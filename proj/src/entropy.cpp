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

#include "qci/entropy.hpp"

#include <cmath>
#include <cstdlib>

namespace qci {

double entropy_of_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l > kEntropyFloor) s -= l * std::log2(l);
  }
  return s;
}

double vn_entropy(const DensityMatrix& rho) {
  const auto eig = eigh(rho.matrix(), rho.tol());
  return entropy_of_spectrum(eig.values);
}

std::string_view to_string(CoherentInfoMethod m) {
  switch (m) {
    case CoherentInfoMethod::purification: return "purification";
    case CoherentInfoMethod::complementary: return "complementary";
  }
  return "unknown";
}

std::optional<CoherentInfoMethod> parse_method(std::string_view name) {
  if (name == "purification") return CoherentInfoMethod::purification;
  if (name == "complementary") return CoherentInfoMethod::complementary;
  return std::nullopt;
}

EntropyReport coherent_info(const DensityMatrix& rho, const KrausChannel& phi,
                            CoherentInfoMethod method) {
  if (!phi.is_endomorphic()) {
    throw UnsupportedError("coherent_info: channel must map a space to itself");
  }
  if (rho.dim() != phi.d_in()) {
    throw DimensionError("coherent_info: state dimension " + std::to_string(rho.dim()) +
                         " does not match channel dimension " + std::to_string(phi.d_in()));
  }
  EntropyReport r;
  r.method = method;
  r.s_rho = vn_entropy(rho);
  r.s_output = vn_entropy(apply(phi, rho));
  switch (method) {
    case CoherentInfoMethod::purification: {
      const DensityMatrix u = purify(rho).density();
      r.s_joint_or_exchange = vn_entropy(apply_extended(phi, u, 1));
      break;
    }
    case CoherentInfoMethod::complementary:
      r.s_joint_or_exchange = vn_entropy(complementary(phi, rho));
      break;
  }
  r.coherent_info = r.s_output - r.s_joint_or_exchange;
  r.gap_to_bound = r.s_rho - r.coherent_info;
  return r;
}

double check_araki_lieb(const DensityMatrix& rho_bc) {
  if (rho_bc.shape().arity() != 2) {
    throw DimensionError("check_araki_lieb: expected a two-factor state, got " +
                         std::to_string(rho_bc.shape().arity()) + " factors");
  }
  const double s_bc = vn_entropy(rho_bc);
  const double s_b = vn_entropy(reduce(rho_bc, {0}));
  const double s_c = vn_entropy(reduce(rho_bc, {1}));
  return s_bc - std::abs(s_b - s_c);
}

double check_ssa(const DensityMatrix& rho_abc) {
  if (rho_abc.shape().arity() != 3) {
    throw DimensionError("check_ssa: expected a three-factor state, got " +
                         std::to_string(rho_abc.shape().arity()) + " factors");
  }
  const double s_ab = vn_entropy(reduce(rho_abc, {0, 1}));
  const double s_bc = vn_entropy(reduce(rho_abc, {1, 2}));
  const double s_b = vn_entropy(reduce(rho_abc, {1}));
  const double s_abc = vn_entropy(rho_abc);
  return s_ab + s_bc - s_abc - s_b;
}

}  // namespace qci
