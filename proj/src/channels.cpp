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

#include "qci/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qci {

KrausChannel make_channel(std::vector<Matrix> kraus, double tol) {
  if (kraus.empty()) throw DimensionError("channel needs at least one Kraus operator");
  const std::size_t r = kraus.front().rows(), c = kraus.front().cols();
  if (r == 0 || c == 0) throw DimensionError("Kraus operators must be non-empty");
  Matrix sum(c, c);
  for (const auto& m : kraus) {
    if (m.rows() != r || m.cols() != c) {
      throw DimensionError("Kraus operators have inconsistent dimensions");
    }
    sum += m.adjoint() * m;
  }
  const double dev = max_abs_diff(sum, Matrix::identity(c));
  if (dev > tol) {
    std::ostringstream os;
    os << "Kraus family not trace preserving (max |sum M^dagger M - I| = " << dev << ")";
    throw ValidationError(ValidationKind::completeness, dev, os.str());
  }
  return KrausChannel(std::move(kraus), tol);
}

Matrix apply(const KrausChannel& phi, const Matrix& x) {
  if (!x.is_square() || x.rows() != phi.d_in()) {
    throw DimensionError("apply: operator is " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + ", channel input dimension is " +
                         std::to_string(phi.d_in()));
  }
  Matrix out(phi.d_out(), phi.d_out());
  for (const auto& m : phi.kraus()) out += m * x * m.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho) {
  Matrix out = hermitian_part(apply(phi, rho.matrix()));
  FactorShape shape = phi.is_endomorphic() ? rho.shape() : FactorShape{phi.d_out()};
  return make_density(out, std::move(shape), std::max(rho.tol(), phi.tol()));
}

DensityMatrix apply_extended(const KrausChannel& phi, const DensityMatrix& rho,
                             std::size_t acting_factor) {
  const auto& dims = rho.shape().dims;
  if (acting_factor >= dims.size()) {
    throw DimensionError("apply_extended: factor index out of range");
  }
  if (dims[acting_factor] != phi.d_in()) {
    throw DimensionError("apply_extended: factor " + std::to_string(acting_factor) +
                         " has dimension " + std::to_string(dims[acting_factor]) +
                         ", channel input dimension is " + std::to_string(phi.d_in()));
  }
  std::size_t left = 1, right = 1;
  for (std::size_t f = 0; f < acting_factor; ++f) left *= dims[f];
  for (std::size_t f = acting_factor + 1; f < dims.size(); ++f) right *= dims[f];
  const Matrix il = Matrix::identity(left), ir = Matrix::identity(right);

  const std::size_t n_out = left * phi.d_out() * right;
  Matrix out(n_out, n_out);
  for (const auto& m : phi.kraus()) {
    const Matrix big = kron(kron(il, m), ir);
    out += big * rho.matrix() * big.adjoint();
  }
  std::vector<std::size_t> out_dims = dims;
  out_dims[acting_factor] = phi.d_out();
  return make_density(hermitian_part(out), FactorShape(std::move(out_dims)),
                      std::max(rho.tol(), phi.tol()));
}

Matrix choi(const KrausChannel& phi) {
  const std::size_t din = phi.d_in(), dout = phi.d_out();
  Matrix j(din * dout, din * dout);
  for (std::size_t a = 0; a < din; ++a)
    for (std::size_t b = 0; b < din; ++b) {
      Matrix eab(din, din);
      eab(a, b) = 1.0;
      const Matrix img = apply(phi, eab);
      for (std::size_t r = 0; r < dout; ++r)
        for (std::size_t c = 0; c < dout; ++c) j(a * dout + r, b * dout + c) = img(r, c);
    }
  return j;
}

KrausChannel canonical_kraus(const KrausChannel& phi) {
  const std::size_t din = phi.d_in(), dout = phi.d_out();
  const auto eig = eigh(choi(phi), std::max(kDefaultTol, phi.tol()));
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double mu = eig.values[k];
    if (mu <= kKrausCutoff) break;  // values are descending
    const double s = std::sqrt(mu);
    Matrix m(dout, din);
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t a = 0; a < dout; ++a) m(a, i) = s * eig.vectors(i * dout + a, k);
    ops.push_back(std::move(m));
  }
  return make_channel(std::move(ops), std::max(kDefaultTol, phi.tol()));
}

StinespringDilation stinespring(const KrausChannel& phi) {
  if (!phi.is_endomorphic()) {
    throw UnsupportedError("stinespring: only channels with d_in == d_out are supported");
  }
  const KrausChannel canon = canonical_kraus(phi);
  const std::size_t d = canon.d_in(), k_env = canon.size();

  Matrix v(d * k_env, d);
  for (std::size_t k = 0; k < k_env; ++k) {
    const Matrix& m = canon.kraus()[k];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t x = 0; x < d; ++x) v(a * k_env + k, x) = m(a, x);
  }
  const Matrix w = complete_to_unitary(v, std::max(kDefaultTol, canon.tol()));

  // Column x*K of U is the image of |x>|0>; the completion fills the rest.
  Matrix u(d * k_env, d * k_env);
  std::size_t spare = d;
  for (std::size_t col = 0; col < d * k_env; ++col) {
    const std::size_t src = (col % k_env == 0) ? col / k_env : spare++;
    for (std::size_t r = 0; r < d * k_env; ++r) u(r, col) = w(r, src);
  }
  return StinespringDilation{std::move(u), d, k_env, basis_state(k_env, 0)};
}

DensityMatrix dilate(const StinespringDilation& dil, const DensityMatrix& rho) {
  if (rho.dim() != dil.sys_dim) throw DimensionError("dilate: state dimension mismatch");
  const Matrix env = outer(dil.env_state.vec(), dil.env_state.vec());
  const Matrix out = dil.u * kron(rho.matrix(), env) * dil.u.adjoint();
  return make_density(hermitian_part(out), FactorShape{dil.sys_dim, dil.env_dim}, rho.tol());
}

DensityMatrix apply(const StinespringDilation& dil, const DensityMatrix& rho) {
  const DensityMatrix omega = dilate(dil, rho);
  Matrix m = partial_trace(omega.matrix(), omega.shape(), {0});
  FactorShape shape = rho.shape();
  return make_density(m, std::move(shape), rho.tol());
}

DensityMatrix complementary(const KrausChannel& phi, const DensityMatrix& rho) {
  if (rho.dim() != phi.d_in()) throw DimensionError("complementary: state dimension mismatch");
  const KrausChannel canon = canonical_kraus(phi);
  const std::size_t k = canon.size();
  std::vector<Matrix> m_rho;
  m_rho.reserve(k);
  for (const auto& m : canon.kraus()) m_rho.push_back(m * rho.matrix());
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      // Tr(M_i rho M_j^dagger) = sum_ab (M_i rho)_ab conj((M_j)_ab)
      const Matrix& mj = canon.kraus()[j];
      cplx s = 0.0;
      for (std::size_t a = 0; a < mj.rows(); ++a)
        for (std::size_t b = 0; b < mj.cols(); ++b) s += m_rho[i](a, b) * std::conj(mj(a, b));
      out(i, j) = s;
    }
  return make_density(hermitian_part(out), FactorShape{k}, std::max(rho.tol(), canon.tol()));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (first.d_out() != second.d_in()) {
    throw DimensionError("compose: output dimension " + std::to_string(first.d_out()) +
                         " does not match input dimension " + std::to_string(second.d_in()));
  }
  std::vector<Matrix> ops;
  ops.reserve(first.size() * second.size());
  for (const auto& n : second.kraus())
    for (const auto& m : first.kraus()) ops.push_back(n * m);
  return make_channel(std::move(ops), first.tol() + second.tol());
}

KrausChannel identity_channel(std::size_t d) {
  return make_channel({Matrix::identity(d)});
}

KrausChannel dephasing_channel(std::size_t d) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix p(d, d);
    p(i, i) = 1.0;
    ops.push_back(std::move(p));
  }
  return make_channel(std::move(ops));
}

KrausChannel completely_depolarizing_qubit() {
  const cplx h = 0.5, ih{0.0, 0.5};
  return make_channel({
      Matrix::from_rows({{h, 0.0}, {0.0, h}}),
      Matrix::from_rows({{0.0, h}, {h, 0.0}}),
      Matrix::from_rows({{0.0, -ih}, {ih, 0.0}}),
      Matrix::from_rows({{h, 0.0}, {0.0, -h}}),
  });
}

KrausChannel random_channel(std::size_t d, std::size_t kraus_count, Rng& rng) {
  if (d == 0 || kraus_count == 0) {
    throw DimensionError("random_channel: dimension and Kraus count must be positive");
  }
  const Matrix w = haar_unitary(d * kraus_count, rng);
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < kraus_count; ++k) {
    Matrix m(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t x = 0; x < d; ++x) m(a, x) = w(k * d + a, x);
    ops.push_back(std::move(m));
  }
  return make_channel(std::move(ops));
}

}  // namespace qci
