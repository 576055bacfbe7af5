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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sptchain/state.hpp"

namespace sptchain {

enum class CutKind { tripartite, quadripartite };

CutKind cut_from_name(const std::string& name);  // "t", "q"
std::string cut_name(CutKind kind);

/// Disjoint covering assignment of the chain to regions. Tripartite splits
/// into contiguous blocks A | B | C; quadripartite into A | B | D | C with
/// the traced-out block D separating B from C in the bulk.
struct CutLayout {
  int n = 0;
  CutKind kind = CutKind::tripartite;
  uint64_t a_mask = 0, b_mask = 0, c_mask = 0, d_mask = 0;  // d empty for tripartite

  void validate() const;
};

/// Contiguous blocks with sizes as equal as possible, remainder going to
/// the leftmost blocks in chain order. Needs n >= 6 (tripartite) or
/// n >= 8 (quadripartite).
CutLayout make_layout(int n, CutKind kind);

/// Layout from explicit 1-based inclusive block ends: {a_end, b_end} for
/// tripartite, {a_end, b_end, d_end} for quadripartite.
CutLayout layout_from_ends(int n, CutKind kind, const std::vector<int>& ends);

/// Exact partial trace onto the qubits in subset_mask (any subset, not
/// necessarily contiguous). The result is Hermitian with unit trace; a
/// non-normalized input is normalized on the fly and flagged through
/// `renormalized` when given.
Eigen::MatrixXcd reduced_density(const StateVector& v, uint64_t subset_mask,
                                 bool* renormalized = nullptr);

/// -sum_i lambda_i log2 lambda_i, clipping eigenvalues below 1e-12.
/// Eigenvalues below -1e-9 signal an upstream bug and throw.
double von_neumann_bits(const Eigen::MatrixXcd& rho);

/// Entropy in bits of the given qubit subset of a pure global state,
/// evaluated on the smaller of subset and complement.
double region_entropy(const StateVector& v, uint64_t subset_mask);

struct TopoEntropyRecord {
  double s_ab = 0, s_bc = 0, s_b = 0, s_abc = 0;
  double s_topo = 0;  // s_ab + s_bc - s_b - s_abc
  CutLayout layout;
};

/// The boundary topological entanglement entropy of a pure state under the
/// given cut. S_ABC uses the complement trick (empty for tripartite cuts,
/// region D for quadripartite ones), keeping every dense eigenproblem at or
/// below 2^ceil(n/2).
TopoEntropyRecord topo_entropy(const StateVector& v, const CutLayout& layout);

}  // namespace sptchain
