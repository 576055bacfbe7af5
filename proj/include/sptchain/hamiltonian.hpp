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

#include <string>
#include <utility>
#include <vector>

#include "sptchain/pauli.hpp"
#include "sptchain/state.hpp"

namespace sptchain {

enum class Model { cluster, symmetry_breaking, zxxz };
enum class Boundary { open, periodic };

Model model_from_name(const std::string& name);  // "clu", "syb", "zxxz"
std::string model_name(Model m);
Boundary boundary_from_name(const std::string& name);  // "open", "periodic"
std::string boundary_name(Boundary b);

/// Minimum chain length: 4 for the three-body models, 6 for the four-body
/// one.
int model_min_qubits(Model m);

struct ModelSpec {
  Model model = Model::cluster;
  int n = 0;
  double field_b = 0.0;
  Boundary boundary = Boundary::open;

  void validate() const;
};

/// Real-weighted sum of Hermitian Pauli strings.
struct PauliSumOperator {
  int n = 0;
  std::vector<std::pair<double, PauliString>> terms;

  PauliSumOperator(int n_qubits, std::vector<std::pair<double, PauliString>> term_list);
};

/// The +1 stabilizer generators of the model's ideal ground space. Open
/// chains use the bulk index ranges (three-body terms centered on
/// j = 2..N-1, four-body on j = 2..N-2, 1-based); periodic chains wrap all
/// N positions.
std::vector<PauliString> stabilizer_terms(Model m, int n, Boundary boundary);

/// H = -sum_j S_j + B sum_j X_j. Field terms are present only when B != 0.
PauliSumOperator build(const ModelSpec& spec);

/// The protecting symmetry: products of X over the odd/even sublattices for
/// the three-body models, over the three residue classes mod 3 for the
/// four-body one. 1-based class representatives; the odd-N odd-sublattice
/// product includes X_N.
std::vector<PauliString> symmetry_generators(const ModelSpec& spec);

/// Open-chain stabilizer code (no symmetry generators); the object behind
/// the distance reports.
StabilizerGroup code_group(Model m, int n);

/// Full-rank group stabilizing the B=0 symmetric ground state of the open
/// chain: code generators plus the symmetry generators.
StabilizerGroup symmetric_state_group(Model m, int n);

/// out = H * in, computed term by term; out is overwritten.
void apply(const PauliSumOperator& h, const StateVector& in, StateVector& out);
StateVector apply(const PauliSumOperator& h, const StateVector& in);

}  // namespace sptchain
