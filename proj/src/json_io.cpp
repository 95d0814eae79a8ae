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

#include "qci/json_io.hpp"

#include <fstream>

namespace qci {

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex number must be [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw FormatError(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

FactorShape shape_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("\"dims\" must be a non-empty array");
  std::vector<std::size_t> dims;
  for (const auto& d : j) dims.push_back(positive_int(d, "dimension"));
  return FactorShape(std::move(dims));
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw FormatError("matrix rows have unequal length");
    for (const auto& z : row) entries.push_back(complex_from_json(z));
  }
  return Matrix(rows, cols, std::move(entries));
}

json to_json(const DensityMatrix& rho) {
  return json{{"dims", rho.shape().dims}, {"matrix", to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& j, double tol) {
  const Matrix m = matrix_from_json(field(j, "matrix"));
  const FactorShape shape = j.contains("dims") ? shape_from_json(j["dims"]) : FactorShape{m.rows()};
  return make_density(m, shape, tol);
}

json to_json(const PureState& psi) {
  json v = json::array();
  for (const auto& z : psi.vec()) v.push_back(complex_to_json(z));
  return json{{"dims", psi.shape().dims}, {"vector", std::move(v)}};
}

PureState pure_state_from_json(const json& j) {
  const json& v = field(j, "vector");
  if (!v.is_array() || v.empty()) throw FormatError("\"vector\" must be a non-empty array");
  Vector vec;
  for (const auto& z : v) vec.push_back(complex_from_json(z));
  const FactorShape shape = j.contains("dims") ? shape_from_json(j["dims"]) : FactorShape{vec.size()};
  return make_pure(std::move(vec), shape, 1e-10);
}

json to_json(const KrausChannel& phi) {
  json ops = json::array();
  for (const auto& m : phi.kraus()) ops.push_back(to_json(m));
  return json{{"d_in", phi.d_in()}, {"d_out", phi.d_out()}, {"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j, double tol) {
  const std::size_t d_in = positive_int(field(j, "d_in"), "\"d_in\"");
  const std::size_t d_out = positive_int(field(j, "d_out"), "\"d_out\"");
  const json& ops = field(j, "kraus");
  if (!ops.is_array() || ops.empty()) throw FormatError("\"kraus\" must be a non-empty array");
  std::vector<Matrix> kraus;
  for (const auto& op : ops) {
    Matrix m = matrix_from_json(op);
    if (m.rows() != d_out || m.cols() != d_in) {
      throw FormatError("Kraus operator is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", declared d_out x d_in is " +
                        std::to_string(d_out) + "x" + std::to_string(d_in));
    }
    kraus.push_back(std::move(m));
  }
  return make_channel(std::move(kraus), tol);
}

json to_json(const EntropyReport& r) {
  return json{{"s_rho", r.s_rho},
              {"s_output", r.s_output},
              {"s_joint_or_exchange", r.s_joint_or_exchange},
              {"coherent_info", r.coherent_info},
              {"gap_to_bound", r.gap_to_bound},
              {"method", std::string(to_string(r.method))}};
}

json to_json(const SaturationCertificate& cert) {
  return json{{"d_L", cert.d_L},
              {"d_R", cert.d_R},
              {"d_C", cert.d_C},
              {"w", to_json(cert.w)},
              {"rho_L", to_json(cert.rho_L)},
              {"psi_RC", to_json(cert.psi_RC)},
              {"residual", cert.residual},
              {"support_only", cert.support_only}};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace qci
