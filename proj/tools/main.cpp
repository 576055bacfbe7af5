// Copyright 2026 The sptchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sptchain/sweep.hpp"
#include "sptchain/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::optional<std::vector<int>> parse_cut_ends(const std::string& cuts) {
  if (cuts.empty()) return std::nullopt;
  std::vector<int> ends;
  size_t pos = 0;
  while (pos < cuts.size()) {
    size_t next = cuts.find(',', pos);
    if (next == std::string::npos) next = cuts.size();
    ends.push_back(std::stoi(cuts.substr(pos, next - pos)));
    pos = next + 1;
  }
  return ends;
}

struct CommonFlags {
  std::string model = "clu";
  int n = 12;
  std::string boundary = "open";
  uint64_t seed = 1;
  double tol = 1e-10;
  int krylov_dim = 120;
  std::string format = "csv";
  std::string out_path;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer spin chains: spectra, code distance, and topological "
               "entanglement entropy"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string cut = "t";
  std::string cuts_spec;
  double b_single = 0.0;
  double b_min = 0.0, b_max = 2.0;
  int b_steps = 41;
  int workers = 1;
  std::string suite = "all";

  CLI::App* sweep = app.add_subcommand("sweep", "Field sweep emitting one row per (B, cut)");
  sweep->add_option("--model", flags.model, "clu|syb|zxxz")->capture_default_str();
  sweep->add_option("--n", flags.n, "chain length")->capture_default_str();
  sweep->add_option("--boundary", flags.boundary, "open|periodic")->capture_default_str();
  sweep->add_option("--b-min", b_min)->capture_default_str();
  sweep->add_option("--b-max", b_max)->capture_default_str();
  sweep->add_option("--b-steps", b_steps)->capture_default_str();
  sweep->add_option("--cut", cut, "t|q|both")->capture_default_str();
  sweep->add_option("--cuts", cuts_spec, "explicit 1-based block ends, e.g. 3,6,9");
  sweep->add_option("--seed", flags.seed)->capture_default_str();
  sweep->add_option("--tol", flags.tol)->capture_default_str();
  sweep->add_option("--krylov-dim", flags.krylov_dim)->capture_default_str();
  sweep->add_option("--workers", workers)->capture_default_str();
  sweep->add_option("--out", flags.out_path, "output file (default stdout)");
  sweep->add_option("--format", flags.format, "csv|json")->capture_default_str();

  CLI::App* distance = app.add_subcommand("distance", "Code distance report for the open chain");
  distance->add_option("--model", flags.model)->capture_default_str();
  distance->add_option("--n", flags.n)->capture_default_str();
  distance->add_option("--out", flags.out_path);
  std::string distance_format = "text";
  distance->add_option("--format", distance_format, "text|json")->capture_default_str();

  CLI::App* entropy = app.add_subcommand("entropy", "Single-point topological entropy");
  entropy->add_option("--model", flags.model)->capture_default_str();
  entropy->add_option("--n", flags.n)->capture_default_str();
  entropy->add_option("--boundary", flags.boundary)->capture_default_str();
  entropy->add_option("--b", b_single)->capture_default_str();
  entropy->add_option("--cut", cut, "t|q")->capture_default_str();
  entropy->add_option("--cuts", cuts_spec, "explicit 1-based block ends");
  entropy->add_option("--seed", flags.seed)->capture_default_str();
  entropy->add_option("--tol", flags.tol)->capture_default_str();
  entropy->add_option("--krylov-dim", flags.krylov_dim)->capture_default_str();
  entropy->add_option("--out", flags.out_path);
  std::string entropy_format = "text";
  entropy->add_option("--format", entropy_format, "text|json")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Run the library's invariant checks");
  verify->add_option("--suite", suite, "pauli|spectra|entropy|transforms|all")
      ->capture_default_str();
  verify->add_option("--out", flags.out_path);
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text|json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message/help
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      sptchain::SweepConfig config;
      config.model = sptchain::model_from_name(flags.model);
      config.n = flags.n;
      config.boundary = sptchain::boundary_from_name(flags.boundary);
      config.b_min = b_min;
      config.b_max = b_max;
      config.b_steps = b_steps;
      if (cut == "t") {
        config.cut_t = true;
        config.cut_q = false;
      } else if (cut == "q") {
        config.cut_t = false;
        config.cut_q = true;
      } else if (cut == "both") {
        config.cut_t = config.cut_q = true;
      } else {
        throw std::invalid_argument("unknown cut '" + cut + "' (expected t, q, or both)");
      }
      config.explicit_ends = parse_cut_ends(cuts_spec);
      config.seed = flags.seed;
      config.tol = flags.tol;
      config.krylov_dim = flags.krylov_dim;
      config.workers = workers;
      config.validate();

      const auto rows = sptchain::run_sweep(config);
      if (flags.format == "csv") write_output(sptchain::to_csv(rows), flags.out_path);
      else if (flags.format == "json") write_output(sptchain::to_json(rows), flags.out_path);
      else throw std::invalid_argument("unknown format '" + flags.format + "'");
      for (const auto& row : rows) {
        if (!row.converged) {
          std::cerr << "warning: eigensolver did not converge at b=" << row.b << "\n";
          return kExitCheckFailure;
        }
      }
      return kExitOk;
    }

    if (distance->parsed()) {
      const auto report =
          sptchain::distance_report(sptchain::model_from_name(flags.model), flags.n);
      if (distance_format == "text") write_output(sptchain::format_text(report), flags.out_path);
      else if (distance_format == "json") write_output(sptchain::format_json(report), flags.out_path);
      else throw std::invalid_argument("unknown format '" + distance_format + "'");
      return report.matches ? kExitOk : kExitCheckFailure;
    }

    if (entropy->parsed()) {
      const auto model = sptchain::model_from_name(flags.model);
      const auto boundary = sptchain::boundary_from_name(flags.boundary);
      const auto kind = sptchain::cut_from_name(cut);
      const auto point =
          sptchain::entropy_point(model, flags.n, boundary, b_single, kind,
                                  parse_cut_ends(cuts_spec), flags.seed, flags.tol,
                                  flags.krylov_dim);
      if (entropy_format == "text") {
        write_output(sptchain::format_text(model, flags.n, boundary, b_single, point),
                     flags.out_path);
      } else if (entropy_format == "json") {
        write_output(sptchain::format_json(model, flags.n, boundary, b_single, point),
                     flags.out_path);
      } else {
        throw std::invalid_argument("unknown format '" + entropy_format + "'");
      }
      return point.converged ? kExitOk : kExitCheckFailure;
    }

    if (verify->parsed()) {
      const auto results = sptchain::run_checks(suite);
      if (verify_format == "text") write_output(sptchain::format_text(results), flags.out_path);
      else if (verify_format == "json") write_output(sptchain::format_json(results), flags.out_path);
      else throw std::invalid_argument("unknown format '" + verify_format + "'");
      return sptchain::all_passed(results) ? kExitOk : kExitCheckFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
