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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qci/channels.hpp"
#include "qci/entropy.hpp"
#include "qci/json_io.hpp"
#include "qci/saturation.hpp"
#include "qci/states.hpp"

namespace qci::cli {

namespace {

namespace fs = std::filesystem;

/// Reported when the caller asked for something the command cannot do.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { json, text };

struct RunConfig {
  std::string state_path;
  std::string channel_path;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
  std::string format_name;
  std::string method_name = "purification";
  std::string recovery_out;

  // random-instance / gap-survey
  long long dim = 0;
  long long d_l = 0;
  long long d_r = 0;
  long long kraus = 2;
  long long count = 100;
  bool saturating = false;
  std::string out_dir = ".";

  Format format(Format fallback) const {
    if (format_name.empty()) return fallback;
    if (format_name == "json") return Format::json;
    if (format_name == "text") return Format::text;
    throw UsageError("unknown format '" + format_name + "' (expected json or text)");
  }

  /// --tol, else QCI_TOL, else the library default.
  double tolerance() const {
    double t = kSaturationTol;
    if (tol) {
      t = *tol;
    } else if (const char* env = std::getenv("QCI_TOL"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      t = std::strtod(env, &end);
      if (end == env || *end != '\0') throw UsageError(std::string("QCI_TOL is not a number: ") + env);
    }
    if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("tolerance must be positive");
    return t;
  }
};

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string sci6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

json number_or_null(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

class Reporter {
 public:
  Reporter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  std::ostream& stream() { return buf_; }

  void flush() {
    if (cfg_.output.empty()) {
      out_ << buf_.str();
      return;
    }
    std::ofstream f(cfg_.output);
    if (!f) throw FormatError("cannot write " + cfg_.output);
    f << buf_.str();
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostringstream buf_;
};

void write_text_report(std::ostream& os, const EntropyReport& r) {
  os << "method: " << to_string(r.method) << '\n'
     << "s_rho: " << fixed6(r.s_rho) << '\n'
     << "s_output: " << fixed6(r.s_output) << '\n'
     << "s_joint_or_exchange: " << fixed6(r.s_joint_or_exchange) << '\n'
     << "coherent_info: " << fixed6(r.coherent_info) << '\n'
     << "gap_to_bound: " << fixed6(r.gap_to_bound) << '\n';
}

struct Inputs {
  DensityMatrix rho;
  KrausChannel channel;
};

Inputs load_inputs(const RunConfig& cfg) {
  DensityMatrix rho = state_from_json(load_json_file(cfg.state_path));
  KrausChannel phi = channel_from_json(load_json_file(cfg.channel_path));
  if (rho.dim() != phi.d_in()) {
    throw DimensionError("state dimension " + std::to_string(rho.dim()) +
                         " does not match channel input dimension " + std::to_string(phi.d_in()));
  }
  if (!phi.is_endomorphic()) {
    throw DimensionError("channel must have d_in == d_out");
  }
  return {std::move(rho), std::move(phi)};
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  const DensityMatrix rho = state_from_json(load_json_file(cfg.state_path));
  const double s = vn_entropy(rho);
  Reporter rep(cfg, out);
  if (cfg.format(Format::text) == Format::json) {
    rep.stream() << json{{"entropy", s}}.dump(2) << '\n';
  } else {
    rep.stream() << fixed6(s) << '\n';
  }
  rep.flush();
  return kSuccess;
}

int cmd_coherent_info(const RunConfig& cfg, std::ostream& out) {
  const auto method = parse_method(cfg.method_name);
  if (!method) throw UsageError("unknown method '" + cfg.method_name + "'");
  const Inputs in = load_inputs(cfg);
  const EntropyReport r = coherent_info(in.rho, in.channel, *method);
  Reporter rep(cfg, out);
  if (cfg.format(Format::json) == Format::json) {
    rep.stream() << to_json(r).dump(2) << '\n';
  } else {
    write_text_report(rep.stream(), r);
  }
  rep.flush();
  return kSuccess;
}

json saturation_json(const SaturationCheck& check, double tol) {
  json j{{"gap", check.gap},
         {"tol", tol},
         {"saturated", check.certificate.has_value()},
         {"report", to_json(check.report)},
         {"product_output_distance", number_or_null(check.product_output_distance)},
         {"product_output", check.product_output}};
  j["certificate"] = check.certificate ? to_json(*check.certificate) : json(nullptr);
  return j;
}

int cmd_check_saturation(const RunConfig& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  const Inputs in = load_inputs(cfg);
  const SaturationCheck check = check_coherent_saturation(in.rho, in.channel, tol);
  Reporter rep(cfg, out);
  if (cfg.format(Format::json) == Format::json) {
    rep.stream() << saturation_json(check, tol).dump(2) << '\n';
  } else {
    auto& os = rep.stream();
    os << "gap: " << fixed6(check.gap) << '\n'
       << "saturated: " << (check.certificate ? "yes" : "no") << '\n';
    if (check.certificate) {
      os << "d_L: " << check.certificate->d_L << '\n'
         << "d_R: " << check.certificate->d_R << '\n'
         << "residual: " << sci6(check.certificate->residual) << '\n'
         << "product_output_distance: " << sci6(*check.product_output_distance) << '\n';
    }
  }
  rep.flush();
  return check.certificate ? kSuccess : kNegativeResult;
}

int cmd_recover(const RunConfig& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  const Inputs in = load_inputs(cfg);
  const SaturationCheck check = check_coherent_saturation(in.rho, in.channel, tol);
  Reporter rep(cfg, out);
  const bool json_out = cfg.format(Format::json) == Format::json;
  if (!check.certificate) {
    if (json_out) {
      rep.stream() << json{{"gap", check.gap}, {"tol", tol}, {"saturated", false}}.dump(2) << '\n';
    } else {
      rep.stream() << "gap: " << fixed6(check.gap) << "\nsaturated: no\n";
    }
    rep.flush();
    return kNegativeResult;
  }
  const RecoveryChannel psi = build_recovery(*check.dilation, *check.certificate);
  const double distance = verify_recovery(in.rho, in.channel, psi);
  const bool recovered = distance <= kReconstructTol;
  if (!cfg.recovery_out.empty()) save_json_file(cfg.recovery_out, to_json(psi.channel));
  if (json_out) {
    rep.stream() << json{{"gap", check.gap},
                         {"tol", tol},
                         {"saturated", true},
                         {"recovery_distance", distance},
                         {"kraus_count", psi.channel.size()},
                         {"recovered", recovered}}
                        .dump(2)
                 << '\n';
  } else {
    rep.stream() << "gap: " << fixed6(check.gap) << '\n'
                 << "recovery_distance: " << sci6(distance) << '\n'
                 << "kraus_count: " << psi.channel.size() << '\n'
                 << "recovered: " << (recovered ? "yes" : "no") << '\n';
  }
  rep.flush();
  return recovered ? kSuccess : kDetectorFailure;
}

std::size_t checked_dim(long long v, const char* name) {
  if (v < 1) throw UsageError(std::string(name) + " must be at least 1");
  if (v > 64) throw UsageError(std::string(name) + " must be at most 64");
  return static_cast<std::size_t>(v);
}

Inputs generate(const RunConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  if (cfg.saturating) {
    const std::size_t dl = checked_dim(cfg.d_l, "--dl");
    const std::size_t dr = checked_dim(cfg.d_r, "--dr");
    if (dl * dr > 64) throw UsageError("--dl * --dr must be at most 64");
    SaturatingInstance inst = random_saturating_instance(dl, dr, rng);
    return {std::move(inst.rho), std::move(inst.channel)};
  }
  const std::size_t d = checked_dim(cfg.dim, "--dim");
  const std::size_t k = checked_dim(cfg.kraus, "--kraus");
  if (d * k > 64) throw UsageError("--dim * --kraus must be at most 64");
  DensityMatrix rho = random_density(d, d, rng);
  KrausChannel phi = random_channel(d, k, rng);
  return {std::move(rho), std::move(phi)};
}

int cmd_random_instance(const RunConfig& cfg, std::ostream& out) {
  const Inputs in = generate(cfg, cfg.seed);
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path state = dir / "state.json";
  const fs::path channel = dir / "channel.json";
  save_json_file(state, to_json(in.rho));
  save_json_file(channel, to_json(in.channel));
  Reporter rep(cfg, out);
  rep.stream() << json{{"state", state.string()}, {"channel", channel.string()}}.dump(2) << '\n';
  rep.flush();
  return kSuccess;
}

struct SurveyRow {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double gap = 0.0;
  std::string status;
  std::optional<double> product_output_distance;
  std::optional<double> residual;
};

int cmd_gap_survey(const RunConfig& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  if (cfg.count < 0) throw UsageError("--count must be non-negative");
  std::vector<SurveyRow> rows;
  for (long long i = 0; i < cfg.count; ++i) {
    SurveyRow row;
    row.index = static_cast<std::size_t>(i);
    row.seed = cfg.seed + static_cast<std::uint64_t>(i);
    const Inputs in = generate(cfg, row.seed);
    try {
      const SaturationCheck check = check_coherent_saturation(in.rho, in.channel, tol);
      row.gap = check.gap;
      if (check.certificate) {
        row.status = "saturated";
        row.product_output_distance = check.product_output_distance;
        row.residual = check.certificate->residual;
      } else {
        row.status = "not_saturating";
      }
    } catch (const StructureNotFoundError& e) {
      row.gap = coherent_info(in.rho, in.channel).gap_to_bound;
      row.status = "structure_not_found";
      row.residual = e.residual();
    } catch (const NotSaturatingError& e) {
      row.gap = coherent_info(in.rho, in.channel).gap_to_bound;
      row.status = "not_saturating";
    }
    rows.push_back(std::move(row));
  }

  std::vector<double> gaps;
  for (const auto& r : rows) gaps.push_back(r.gap);
  std::sort(gaps.begin(), gaps.end());
  std::optional<double> min_gap, median_gap;
  if (!gaps.empty()) {
    min_gap = gaps.front();
    const std::size_t n = gaps.size();
    median_gap = n % 2 ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
  }

  Reporter rep(cfg, out);
  auto& os = rep.stream();
  if (cfg.format(Format::text) == Format::json) {
    json jrows = json::array();
    for (const auto& r : rows) {
      jrows.push_back(json{{"index", r.index},
                           {"seed", r.seed},
                           {"gap", r.gap},
                           {"status", r.status},
                           {"product_output_distance", number_or_null(r.product_output_distance)},
                           {"residual", number_or_null(r.residual)}});
    }
    json summary{{"count", rows.size()},
                 {"min_gap", number_or_null(min_gap)},
                 {"median_gap", number_or_null(median_gap)}};
    os << json{{"rows", std::move(jrows)}, {"summary", std::move(summary)}}.dump(2) << '\n';
  } else {
    auto opt = [](const std::optional<double>& v) { return v ? sci6(*v) : std::string(); };
    os << "index,seed,gap,status,product_output_distance,residual\n";
    for (const auto& r : rows) {
      os << r.index << ',' << r.seed << ',' << sci6(r.gap) << ',' << r.status << ','
         << opt(r.product_output_distance) << ',' << opt(r.residual) << '\n';
    }
    os << "# count=" << rows.size();
    if (min_gap) os << " min_gap=" << sci6(*min_gap) << " median_gap=" << sci6(*median_gap);
    os << '\n';
  }
  rep.flush();
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent information and recovery-channel toolkit", "qci"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  RunConfig cfg;
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format_name, "Report format: json or text");
    sub->add_option("-o,--output", cfg.output, "Write the report to a file instead of stdout");
  };
  auto add_inputs = [&cfg](CLI::App* sub) {
    sub->add_option("state", cfg.state_path, "State JSON file")->required();
    sub->add_option("channel", cfg.channel_path, "Channel JSON file")->required();
  };
  auto add_tol = [&cfg](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Saturation tolerance in bits (default 1e-7, env QCI_TOL)");
  };
  auto add_generator = [&cfg](CLI::App* sub) {
    sub->add_option("--dim", cfg.dim, "System dimension (non-saturating instances)");
    sub->add_option("--dl", cfg.d_l, "Dimension of H_L (saturating instances)");
    sub->add_option("--dr", cfg.d_r, "Dimension of H_R (saturating instances)");
    sub->add_option("--kraus", cfg.kraus, "Number of Kraus operators (non-saturating instances)");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_flag("--saturating", cfg.saturating, "Generate instances attaining I_c = S(rho)");
  };

  auto* entropy = app.add_subcommand("entropy", "Von Neumann entropy of a state, in bits");
  entropy->add_option("state", cfg.state_path, "State JSON file")->required();
  add_format(entropy);

  auto* ci = app.add_subcommand("coherent-info", "Coherent information of a state through a channel");
  add_inputs(ci);
  ci->add_option("--method", cfg.method_name, "purification or complementary");
  add_format(ci);

  auto* sat = app.add_subcommand("check-saturation", "Test I_c = S(rho) and extract the certificate");
  add_inputs(sat);
  add_tol(sat);
  add_format(sat);

  auto* rec = app.add_subcommand("recover", "Build and verify the recovery channel");
  add_inputs(rec);
  add_tol(rec);
  rec->add_option("--out", cfg.recovery_out, "Write the recovery channel's Kraus JSON here");
  add_format(rec);

  auto* gen = app.add_subcommand("random-instance", "Write a seeded random state.json and channel.json");
  add_generator(gen);
  gen->add_option("--out-dir", cfg.out_dir, "Directory for the generated files");
  add_format(gen);

  auto* survey = app.add_subcommand("gap-survey", "Tabulate gaps and certificates over random instances");
  add_generator(survey);
  survey->add_option("--count", cfg.count, "Number of instances");
  add_tol(survey);
  add_format(survey);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qci: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (entropy->parsed()) return cmd_entropy(cfg, out);
    if (ci->parsed()) return cmd_coherent_info(cfg, out);
    if (sat->parsed()) return cmd_check_saturation(cfg, out);
    if (rec->parsed()) return cmd_recover(cfg, out);
    if (gen->parsed()) return cmd_random_instance(cfg, out);
    if (survey->parsed()) return cmd_gap_survey(cfg, out);
  } catch (const StructureNotFoundError& e) {
    err << "qci: structure not found: " << e.what() << '\n';
    out << json{{"error", "structure_not_found"}, {"residual", e.residual()}}.dump(2) << '\n';
    return kDetectorFailure;
  } catch (const NotSaturatingError& e) {
    err << "qci: " << e.what() << '\n';
    out << json{{"gap", e.gap()}, {"saturated", false}}.dump(2) << '\n';
    return kNegativeResult;
  } catch (const Error& e) {
    err << "qci: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "qci: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace qci::cli
