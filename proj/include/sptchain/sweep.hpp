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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptchain/entropy.hpp"
#include "sptchain/hamiltonian.hpp"
#include "sptchain/spectra.hpp"

namespace sptchain {

struct SweepConfig {
  Model model = Model::cluster;
  int n = 12;
  Boundary boundary = Boundary::open;
  double b_min = 0.0;
  double b_max = 2.0;
  int b_steps = 41;
  bool cut_t = true;
  bool cut_q = false;
  std::optional<std::vector<int>> explicit_ends;  // applies to the single requested cut
  uint64_t seed = 1;
  double tol = 1e-10;
  int krylov_dim = 120;
  int workers = 1;

  void validate() const;
  std::vector<double> field_grid() const;
};

struct SweepRow {
  Model model;
  int n;
  Boundary boundary;
  double b;
  CutKind cut_kind;
  double s_topo, s_ab, s_bc, s_b, s_abc;
  double ground_energy;
  double symmetric_energy;
  bool converged;
};

/// One symmetric-sector solve and one unrestricted solve per field value,
/// then the topological entropy of the symmetric state under each requested
/// cut. Field points are processed in contiguous chunks (one per worker),
/// warm-starting each solve from the previous point of the chunk. Rows come
/// back in (b, cut) order with tripartite before quadripartite, regardless
/// of scheduling.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);

struct DistanceReport {
  Model model;
  int n;
  int generator_count;
  int logical_qubits;          // log2 of the ground-space dimension
  std::vector<PauliString> logical_basis;
  std::optional<int> distance;  // nullopt: no X-type logical exists
  int expected;                 // floor(n/2) or floor(n/3)
  bool matches;
};

DistanceReport distance_report(Model model, int n);
std::string format_text(const DistanceReport& report);
std::string format_json(const DistanceReport& report);

struct EntropyPoint {
  TopoEntropyRecord record;
  double ground_energy;
  double symmetric_energy;
  bool converged;
};

EntropyPoint entropy_point(Model model, int n, Boundary boundary, double b, CutKind cut,
                           const std::optional<std::vector<int>>& explicit_ends, uint64_t seed,
                           double tol, int krylov_dim);
std::string format_text(Model model, int n, Boundary boundary, double b,
                        const EntropyPoint& point);
std::string format_json(Model model, int n, Boundary boundary, double b,
                        const EntropyPoint& point);

}  // namespace sptchain
