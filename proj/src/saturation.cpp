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

#include "qci/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qci {

namespace {

// <c_k| rho_BC |c_k'> on the C factor; result lives on H_B.
Matrix conditional_block(const Matrix& rho_bc, std::size_t n, std::size_t m,
                         std::span<const cplx> ck, std::span<const cplx> ckp) {
  Matrix out(n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t bp = 0; bp < n; ++bp) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < m; ++c) {
        const cplx left = std::conj(ck[c]);
        if (left == cplx{}) continue;
        for (std::size_t cp = 0; cp < m; ++cp) s += left * rho_bc(b * m + c, bp * m + cp) * ckp[cp];
      }
      out(b, bp) = s;
    }
  return out;
}

// Smallest d_R >= s dividing n with n / d_R >= r, or 0 when none exists.
std::size_t choose_right_dim(std::size_t n, std::size_t r, std::size_t s) {
  for (std::size_t d_r = s; d_r <= n; ++d_r) {
    if (n % d_r == 0 && n / d_r >= r) return d_r;
  }
  return 0;
}

}  // namespace

Matrix reconstruct(const SaturationCertificate& cert) {
  const Matrix inner_state = kron(cert.rho_L.matrix(), outer(cert.psi_RC.vec(), cert.psi_RC.vec()));
  const Matrix frame = kron(cert.w, Matrix::identity(cert.d_C));
  return frame * inner_state * frame.adjoint();
}

SaturationCertificate detect_product_pure_structure(const DensityMatrix& rho_bc, double tol,
                                                    double reconstruct_tol) {
  if (rho_bc.shape().arity() != 2) {
    throw DimensionError("detect_product_pure_structure: expected a two-factor state");
  }
  const std::size_t n = rho_bc.shape().dims[0];
  const std::size_t m = rho_bc.shape().dims[1];

  const DensityMatrix rho_b = reduce(rho_bc, {0});
  const DensityMatrix rho_c = reduce(rho_bc, {1});
  const double gap = vn_entropy(rho_bc) - (vn_entropy(rho_b) - vn_entropy(rho_c));
  if (gap > tol) {
    std::ostringstream os;
    os << "Araki-Lieb gap S(BC) - (S(B) - S(C)) = " << gap << " exceeds tolerance " << tol;
    throw NotSaturatingError(gap, os.str());
  }

  const auto env = eigh(rho_c.matrix(), rho_c.tol());
  std::size_t s = 0;
  while (s < env.values.size() && env.values[s] > kSupportCutoff) ++s;
  std::vector<Vector> c_vecs;
  for (std::size_t k = 0; k < s; ++k) c_vecs.push_back(env.vectors.col(k));
  const double mu0 = env.values[0];

  const Matrix b00 = conditional_block(rho_bc.matrix(), n, m, c_vecs[0], c_vecs[0]) * cplx{1.0 / mu0};
  const auto left = eigh(hermitian_part(b00), 1e-8);
  std::size_t r = 0;
  while (r < left.values.size() && left.values[r] > kSupportCutoff) ++r;
  if (r == 0) throw StructureNotFoundError(1.0, "conditional block has empty support");

  // Column (i, k) holds |l_i r_k>.
  std::vector<Vector> cols(r * s);
  for (std::size_t i = 0; i < r; ++i) cols[i * s] = left.vectors.col(i);
  for (std::size_t k = 1; k < s; ++k) {
    const Matrix bk0 = conditional_block(rho_bc.matrix(), n, m, c_vecs[k], c_vecs[0]);
    for (std::size_t i = 0; i < r; ++i) {
      Vector x = matvec(bk0, cols[i * s]);
      const double scale = 1.0 / (left.values[i] * std::sqrt(env.values[k] * mu0));
      for (auto& z : x) z *= scale;
      cols[i * s + k] = std::move(x);
    }
  }

  // Gram-Schmidt over the generated columns.
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < j; ++p) {
        const cplx c = inner(cols[p], cols[j]);
        for (std::size_t q = 0; q < n; ++q) cols[j][q] -= c * cols[p][q];
      }
    const double nj = vector_norm(cols[j]);
    if (nj < 1e-8) {
      throw StructureNotFoundError(1.0, "generated product basis is linearly dependent");
    }
    for (auto& z : cols[j]) z /= nj;
  }

  const std::size_t d_r = choose_right_dim(n, r, s);
  const bool support_only = (d_r == 0);
  const std::size_t d_R = support_only ? s : d_r;
  const std::size_t d_L = support_only ? r : n / d_r;

  Matrix support(n, r * s);
  for (std::size_t j = 0; j < cols.size(); ++j) support.set_col(j, cols[j]);
  const Matrix full = support_only ? support : complete_to_unitary(support, 1e-8);

  // Grid positions (i, k) with i < r and k < s take the generated columns,
  // every other position the completion in order.
  Matrix w(n, d_L * d_R);
  std::size_t spare = r * s;
  for (std::size_t i = 0; i < d_L; ++i)
    for (std::size_t k = 0; k < d_R; ++k) {
      const std::size_t src = (i < r && k < s) ? i * s + k : spare++;
      w.set_col(i * d_R + k, full.col(src));
    }

  std::vector<double> lam(d_L, 0.0);
  double lam_sum = 0.0;
  for (std::size_t i = 0; i < r; ++i) lam_sum += left.values[i];
  for (std::size_t i = 0; i < r; ++i) lam[i] = left.values[i] / lam_sum;

  Vector psi(d_R * m, 0.0);
  for (std::size_t k = 0; k < s; ++k) {
    const double amp = std::sqrt(env.values[k]);
    for (std::size_t c = 0; c < m; ++c) psi[k * m + c] = amp * c_vecs[k][c];
  }
  const double pn = vector_norm(psi);
  for (auto& z : psi) z /= pn;

  SaturationCertificate cert{d_L,
                             d_R,
                             m,
                             std::move(w),
                             make_density(Matrix::diagonal(lam), rho_bc.tol()),
                             make_pure(std::move(psi), FactorShape{d_R, m}),
                             0.0,
                             support_only};
  cert.residual = trace_distance(reconstruct(cert), rho_bc.matrix());
  if (cert.residual > reconstruct_tol) {
    std::ostringstream os;
    os << "product/pure factorization reconstructs the state only to trace distance "
       << cert.residual;
    throw StructureNotFoundError(cert.residual, os.str());
  }
  return cert;
}

SaturationCheck check_coherent_saturation(const DensityMatrix& rho, const KrausChannel& phi,
                                          double tol, double reconstruct_tol) {
  SaturationCheck out;
  out.report = coherent_info(rho, phi, CoherentInfoMethod::purification);
  out.gap = out.report.gap_to_bound;
  if (out.gap > tol) return out;

  StinespringDilation dil = stinespring(phi);
  const DensityMatrix omega_bc = dilate(dil, rho);
  SaturationCertificate cert = detect_product_pure_structure(omega_bc, tol, reconstruct_tol);

  const Matrix out_state = apply(phi, rho.matrix());
  const Matrix framed = cert.w.adjoint() * out_state * cert.w;
  const FactorShape split{cert.d_L, cert.d_R};
  const Matrix product = kron(partial_trace(framed, split, {0}), partial_trace(framed, split, {1}));
  out.product_output_distance = trace_distance(framed, product);
  out.product_output = *out.product_output_distance <= tol;

  out.dilation = std::move(dil);
  out.certificate = std::move(cert);
  return out;
}

SaturatingInstance random_saturating_instance(std::size_t d_L, std::size_t d_R, Rng& rng) {
  if (d_L == 0 || d_R == 0) throw DimensionError("random_saturating_instance: dims must be positive");
  const std::size_t n = d_L * d_R;
  const Matrix g = haar_unitary(n, rng);
  const Matrix v_l = haar_unitary(d_L, rng);
  const PureState tau = random_pure_state(d_R, rng);
  const DensityMatrix rho_l = random_density(d_L, d_L, rng);

  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < d_R; ++k) {
    // |t><k| on R
    Matrix tk(d_R, d_R);
    for (std::size_t a = 0; a < d_R; ++a) tk(a, k) = tau.vec()[a];
    ops.push_back(kron(v_l, tk) * g);
  }
  KrausChannel phi = make_channel(std::move(ops));

  const Matrix r0 = outer(basis_state(d_R, 0).vec(), basis_state(d_R, 0).vec());
  const Matrix rho = g.adjoint() * kron(rho_l.matrix(), r0) * g;
  return SaturatingInstance{make_density(hermitian_part(rho)), std::move(phi)};
}

RecoveryChannel build_recovery(const StinespringDilation& dilation,
                               const SaturationCertificate& cert) {
  const std::size_t n = dilation.sys_dim, m = dilation.env_dim;
  if (cert.support_only) {
    throw DimensionError("build_recovery: certificate covers only the support of rho_B");
  }
  if (cert.w.rows() != n || cert.w.cols() != n || cert.d_L * cert.d_R != n || cert.d_C != m) {
    throw DimensionError("build_recovery: certificate dimensions do not match the dilation");
  }

  // U^dagger (w (x) 1_C)(1_L (x) |psi>): H_L -> H_B (x) H_C.
  Matrix prepare(cert.d_L * cert.d_R * m, cert.d_L);
  const std::size_t rc = cert.d_R * m;
  for (std::size_t i = 0; i < cert.d_L; ++i)
    for (std::size_t j = 0; j < rc; ++j) prepare(i * rc + j, i) = cert.psi_RC.vec()[j];
  const Matrix lift = dilation.u.adjoint() * kron(cert.w, Matrix::identity(m)) * prepare;

  const Matrix w_dag = cert.w.adjoint();
  std::vector<Matrix> ops;
  ops.reserve(cert.d_R * m);
  for (std::size_t r = 0; r < cert.d_R; ++r) {
    // (1_L (x) <r|) w^dagger
    Matrix discard(cert.d_L, n);
    for (std::size_t i = 0; i < cert.d_L; ++i)
      for (std::size_t b = 0; b < n; ++b) discard(i, b) = w_dag(i * cert.d_R + r, b);
    const Matrix stage = lift * discard;  // (n m) x n
    for (std::size_t c = 0; c < m; ++c) {
      Matrix k(n, n);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t x = 0; x < n; ++x) k(b, x) = stage(b * m + c, x);
      ops.push_back(std::move(k));
    }
  }
  return RecoveryChannel{dilation, cert, make_channel(std::move(ops), 1e-9)};
}

double verify_recovery(const DensityMatrix& rho, const KrausChannel& phi, const KrausChannel& psi) {
  if (rho.dim() != phi.d_in() || phi.d_out() != psi.d_in() || psi.d_out() != rho.dim()) {
    throw DimensionError("verify_recovery: dimensions of state, channel and recovery differ");
  }
  const DensityMatrix u = purify(rho).density();
  const DensityMatrix restored = apply_extended(compose(psi, phi), u, 1);
  return trace_distance(restored, u);
}

double verify_recovery(const DensityMatrix& rho, const KrausChannel& phi,
                       const RecoveryChannel& psi) {
  return verify_recovery(rho, phi, psi.channel);
}

Matrix assemble(const SsaDecomposition& decomp, std::size_t d_a, std::size_t d_b,
                std::size_t d_c) {
  const std::size_t total = d_a * d_b * d_c;
  Matrix out(total, total);
  const Matrix ia = Matrix::identity(d_a), ic = Matrix::identity(d_c);
  for (const auto& blk : decomp.blocks) {
    if (blk.embedding.rows() != d_b || blk.embedding.cols() != blk.d_L * blk.d_R) {
      throw DimensionError("SSA block embedding has the wrong shape");
    }
    if (blk.rho_a_l.dim() != d_a * blk.d_L || blk.rho_r_c.dim() != blk.d_R * d_c) {
      throw DimensionError("SSA block states do not match the block dimensions");
    }
    const Matrix emb = kron(kron(ia, blk.embedding), ic);
    out += emb * kron(blk.rho_a_l.matrix(), blk.rho_r_c.matrix()) * emb.adjoint() *
           cplx{blk.weight};
  }
  return out;
}

double verify_ssa_decomposition(const DensityMatrix& rho_abc, const SsaDecomposition& decomp) {
  if (rho_abc.shape().arity() != 3) {
    throw DimensionError("verify_ssa_decomposition: expected a three-factor state");
  }
  if (decomp.blocks.empty()) throw DimensionError("verify_ssa_decomposition: no blocks");
  const auto& dims = rho_abc.shape().dims;

  constexpr double kWeightTol = 1e-10;
  double wsum = 0.0;
  for (const auto& blk : decomp.blocks) {
    if (blk.weight < -kWeightTol) {
      throw ValidationError(ValidationKind::weights, blk.weight, "SSA block weight is negative");
    }
    wsum += blk.weight;
  }
  if (std::abs(wsum - 1.0) > kWeightTol) {
    std::ostringstream os;
    os << "SSA block weights sum to " << wsum << ", expected 1";
    throw ValidationError(ValidationKind::weights, wsum, os.str());
  }
  for (std::size_t i = 0; i < decomp.blocks.size(); ++i) {
    const Matrix& ei = decomp.blocks[i].embedding;
    if (ei.rows() != dims[1]) throw DimensionError("SSA block embedding has the wrong shape");
    const double dev = isometry_deviation(ei);
    if (dev > kDefaultTol) {
      throw ValidationError(ValidationKind::isometry, dev, "SSA block embedding is not an isometry");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double overlap = max_abs(ei.adjoint() * decomp.blocks[j].embedding);
      if (overlap > kDefaultTol) {
        throw ValidationError(ValidationKind::orthogonality, overlap,
                              "SSA block embeddings are not mutually orthogonal");
      }
    }
  }

  const Matrix assembled = assemble(decomp, dims[0], dims[1], dims[2]);
  const DensityMatrix assembled_state = make_density(assembled, rho_abc.shape(), 1e-9);
  const double ssa_gap = check_ssa(assembled_state);
  if (std::abs(ssa_gap) > 1e-8) {
    throw ValidationError(ValidationKind::inequality, ssa_gap,
                          "assembled decomposition does not saturate strong subadditivity");
  }
  return trace_distance(assembled, rho_abc.matrix());
}

}  // namespace qci
