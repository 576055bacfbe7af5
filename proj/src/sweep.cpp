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

#include "sptchain/sweep.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace sptchain {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<CutKind> requested_cuts(const SweepConfig& config) {
  std::vector<CutKind> cuts;
  if (config.cut_t) cuts.push_back(CutKind::tripartite);
  if (config.cut_q) cuts.push_back(CutKind::quadripartite);
  return cuts;
}

CutLayout resolve_layout(int n, CutKind kind, const std::optional<std::vector<int>>& ends) {
  return ends.has_value() ? layout_from_ends(n, kind, *ends) : make_layout(n, kind);
}

}  // namespace

void SweepConfig::validate() const {
  ModelSpec{model, n, 0.0, boundary}.validate();
  if (!(b_min <= b_max)) throw std::invalid_argument("b_min must be <= b_max");
  if (b_min < 0.0) throw std::invalid_argument("field strengths must be >= 0");
  if (b_steps < 1) throw std::invalid_argument("b_steps must be >= 1");
  if (!cut_t && !cut_q) throw std::invalid_argument("at least one cut must be requested");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (krylov_dim < 2) throw std::invalid_argument("krylov_dim must be >= 2");
  if (explicit_ends.has_value() && cut_t && cut_q) {
    throw std::invalid_argument("explicit cut ends require a single cut kind");
  }
  for (CutKind kind : requested_cuts(*this)) {
    resolve_layout(n, kind, explicit_ends).validate();
  }
}

std::vector<double> SweepConfig::field_grid() const {
  std::vector<double> grid;
  if (b_steps == 1) {
    grid.push_back(b_min);
    return grid;
  }
  for (int i = 0; i < b_steps; ++i) {
    grid.push_back(b_min + (b_max - b_min) * i / (b_steps - 1));
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> grid = config.field_grid();
  const std::vector<CutKind> cuts = requested_cuts(config);
  std::vector<CutLayout> layouts;
  for (CutKind kind : cuts) layouts.push_back(resolve_layout(config.n, kind, config.explicit_ends));

  const ModelSpec base{config.model, config.n, 0.0, config.boundary};
  const std::vector<PauliString> syms = symmetry_generators(base);

  std::vector<SweepRow> rows(grid.size() * cuts.size());

  // Contiguous chunks so each worker can warm-start from its previous
  // point; the chunking is a pure function of (points, workers), keeping
  // output deterministic for a fixed config.
  const int workers = std::min<int>(config.workers, static_cast<int>(grid.size()));
  auto chunk_of = [&](int w) {
    const size_t points = grid.size();
    const size_t lo = points * w / workers;
    const size_t hi = points * (w + 1) / workers;
    return std::pair<size_t, size_t>{lo, hi};
  };

  auto work = [&](int w) {
    auto [lo, hi] = chunk_of(w);
    StateVector prev_sym, prev_any;
    for (size_t i = lo; i < hi; ++i) {
      ModelSpec spec = base;
      spec.field_b = grid[i];
      const PauliSumOperator h = build(spec);

      LanczosOptions opts;
      opts.tol = config.tol;
      opts.krylov_dim = config.krylov_dim;
      opts.seed = config.seed;

      LanczosOptions sym_opts = opts;
      if (i > lo) sym_opts.warm_start = &prev_sym;
      LanczosOptions any_opts = opts;
      if (i > lo) any_opts.warm_start = &prev_any;
      const SectorResolvedResult point = sector_resolved_ground(h, syms, sym_opts, any_opts);

      for (size_t c = 0; c < cuts.size(); ++c) {
        const TopoEntropyRecord rec = topo_entropy(point.state, layouts[c]);
        SweepRow& row = rows[i * cuts.size() + c];
        row.model = config.model;
        row.n = config.n;
        row.boundary = config.boundary;
        row.b = grid[i];
        row.cut_kind = cuts[c];
        row.s_topo = rec.s_topo;
        row.s_ab = rec.s_ab;
        row.s_bc = rec.s_bc;
        row.s_b = rec.s_b;
        row.s_abc = rec.s_abc;
        row.ground_energy = point.ground_energy;
        row.symmetric_energy = point.symmetric_energy;
        row.converged = point.converged;
      }
      prev_sym = point.symmetric_state;
      prev_any = point.global_state;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "model,n,boundary,b,cut_kind,s_topo,s_ab,s_bc,s_b,s_abc,ground_energy,"
         "symmetric_energy,converged\n";
  for (const SweepRow& r : rows) {
    out << model_name(r.model) << ',' << r.n << ',' << boundary_name(r.boundary) << ','
        << fmt_g12(r.b) << ',' << cut_name(r.cut_kind) << ',' << fmt_g12(r.s_topo) << ','
        << fmt_g12(r.s_ab) << ',' << fmt_g12(r.s_bc) << ',' << fmt_g12(r.s_b) << ','
        << fmt_g12(r.s_abc) << ',' << fmt_g12(r.ground_energy) << ','
        << fmt_g12(r.symmetric_energy) << ',' << (r.converged ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

ordered_json row_to_json(const SweepRow& r) {
  ordered_json j;
  j["model"] = model_name(r.model);
  j["n"] = r.n;
  j["boundary"] = boundary_name(r.boundary);
  j["b"] = r.b;
  j["cut_kind"] = cut_name(r.cut_kind);
  j["s_topo"] = r.s_topo;
  j["s_ab"] = r.s_ab;
  j["s_bc"] = r.s_bc;
  j["s_b"] = r.s_b;
  j["s_abc"] = r.s_abc;
  j["ground_energy"] = r.ground_energy;
  j["symmetric_energy"] = r.symmetric_energy;
  j["converged"] = r.converged;
  return j;
}

}  // namespace

std::string to_json(const std::vector<SweepRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const SweepRow& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

DistanceReport distance_report(Model model, int n) {
  const StabilizerGroup code = code_group(model, n);
  DistanceReport report;
  report.model = model;
  report.n = n;
  report.generator_count = code.size();
  report.logical_qubits = n - code.size();
  for (uint64_t mask : x_type_centralizer(code)) {
    const PauliString candidate = PauliString::x_string(n, mask);
    if (!contains_up_to_phase(code, candidate)) report.logical_basis.push_back(candidate);
  }
  report.distance = classical_distance(code);
  report.expected = model == Model::zxxz ? n / 3 : n / 2;
  report.matches = report.distance.has_value() && *report.distance == report.expected;
  return report;
}

std::string format_text(const DistanceReport& r) {
  std::ostringstream out;
  out << "model: " << model_name(r.model) << "  n: " << r.n << "  boundary: open\n";
  out << "stabilizer generators: " << r.generator_count << "\n";
  out << "ground-space dimension: 2^" << r.logical_qubits << "\n";
  out << "x-type logical basis:\n";
  for (const PauliString& p : r.logical_basis) out << "  " << p.str() << "\n";
  out << "classical distance: ";
  if (r.distance.has_value()) out << *r.distance;
  else out << "infinite (no X-type logical)";
  out << "\nexpected floor(N/" << (r.model == Model::zxxz ? 3 : 2) << "): " << r.expected
      << (r.matches ? "  [match]" : "  [MISMATCH]") << "\n";
  return out.str();
}

std::string format_json(const DistanceReport& r) {
  ordered_json j;
  j["model"] = model_name(r.model);
  j["n"] = r.n;
  j["boundary"] = "open";
  j["generator_count"] = r.generator_count;
  j["logical_qubits"] = r.logical_qubits;
  ordered_json basis = ordered_json::array();
  for (const PauliString& p : r.logical_basis) basis.push_back(p.str());
  j["logical_basis"] = basis;
  if (r.distance.has_value()) j["distance"] = *r.distance;
  else j["distance"] = nullptr;
  j["expected"] = r.expected;
  j["matches"] = r.matches;
  return j.dump(2) + "\n";
}

EntropyPoint entropy_point(Model model, int n, Boundary boundary, double b, CutKind cut,
                           const std::optional<std::vector<int>>& explicit_ends, uint64_t seed,
                           double tol, int krylov_dim) {
  const ModelSpec spec{model, n, b, boundary};
  spec.validate();
  const PauliSumOperator h = build(spec);
  const std::vector<PauliString> syms = symmetry_generators(spec);
  LanczosOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  opts.krylov_dim = krylov_dim;
  const SectorResolvedResult solved = sector_resolved_ground(h, syms, opts, opts);
  EntropyPoint point;
  point.record = topo_entropy(solved.state, resolve_layout(n, cut, explicit_ends));
  point.ground_energy = solved.ground_energy;
  point.symmetric_energy = solved.symmetric_energy;
  point.converged = solved.converged;
  return point;
}

std::string format_text(Model model, int n, Boundary boundary, double b,
                        const EntropyPoint& p) {
  std::ostringstream out;
  out << "model: " << model_name(model) << "  n: " << n << "  boundary: "
      << boundary_name(boundary) << "  b: " << fmt_g12(b) << "  cut: "
      << cut_name(p.record.layout.kind) << "\n";
  out << "s_ab:   " << fmt_g12(p.record.s_ab) << "\n";
  out << "s_bc:   " << fmt_g12(p.record.s_bc) << "\n";
  out << "s_b:    " << fmt_g12(p.record.s_b) << "\n";
  out << "s_abc:  " << fmt_g12(p.record.s_abc) << "\n";
  out << "s_topo: " << fmt_g12(p.record.s_topo) << "\n";
  out << "ground_energy:    " << fmt_g12(p.ground_energy) << "\n";
  out << "symmetric_energy: " << fmt_g12(p.symmetric_energy) << "\n";
  out << "converged: " << (p.converged ? "true" : "false") << "\n";
  return out.str();
}

std::string format_json(Model model, int n, Boundary boundary, double b,
                        const EntropyPoint& p) {
  ordered_json j;
  j["model"] = model_name(model);
  j["n"] = n;
  j["boundary"] = boundary_name(boundary);
  j["b"] = b;
  j["cut_kind"] = cut_name(p.record.layout.kind);
  j["s_ab"] = p.record.s_ab;
  j["s_bc"] = p.record.s_bc;
  j["s_b"] = p.record.s_b;
  j["s_abc"] = p.record.s_abc;
  j["s_topo"] = p.record.s_topo;
  j["ground_energy"] = p.ground_energy;
  j["symmetric_energy"] = p.symmetric_energy;
  j["converged"] = p.converged;
  return j.dump(2) + "\n";
}

}  // namespace sptchain
