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

// JSON file formats.
//
//   matrix   [[[re, im], ...], ...]            rows of complex entries
//   state    {"dims": [...], "matrix": matrix}
//   channel  {"d_in": n, "d_out": m, "kraus": [matrix, ...]}
//   vector   {"dims": [...], "vector": [[re, im], ...]}
//
// Doubles are written with nlohmann's shortest round-trip formatting, so a
// value read back is bit-identical to the one written.

#ifndef QCI_JSON_IO_HPP
#define QCI_JSON_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qci/channels.hpp"
#include "qci/entropy.hpp"
#include "qci/saturation.hpp"
#include "qci/states.hpp"

namespace qci {

using json = nlohmann::json;

/// Malformed or schema-violating input.
class FormatError : public Error {
 public:
  using Error::Error;
};

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j, double tol = kDefaultTol);

json to_json(const PureState& psi);
PureState pure_state_from_json(const json& j);

json to_json(const KrausChannel& phi);
KrausChannel channel_from_json(const json& j, double tol = kDefaultTol);

json to_json(const EntropyReport& r);
json to_json(const SaturationCertificate& cert);

/// Parses a file; parse errors are rethrown as FormatError with the file
/// name and the line/column reported by the parser.
json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& j);

}  // namespace qci

#endif  // QCI_JSON_IO_HPP
