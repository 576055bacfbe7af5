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

#include "sptchain/hamiltonian.hpp"
#include "sptchain/pauli.hpp"
#include "sptchain/state.hpp"

namespace sptchain {

/// A chain of two-qubit sites. Site i owns global qubits 2i (left) and
/// 2i+1 (right).
struct SiteChain {
  int n_sites = 0;
  Boundary boundary = Boundary::open;

  int qubits() const { return 2 * n_sites; }
  int left(int site) const { return 2 * site; }
  int right(int site) const { return 2 * site + 1; }
  void validate() const;
};

/// Bond state (|00> + |11>)/sqrt(2) across every adjacent site pair
/// (right qubit of site i with left qubit of site i+1). On an open chain
/// the two edge qubits are unpaired and initialized to |0>.
StateVector build_psi_a(const SiteChain& chain);

/// Onsite bonds: the same pair state within each site, a product state
/// across sites.
StateVector build_psi_b(const SiteChain& chain);

/// Per site: CNOT(left -> right) followed by Hadamard(right). Maps the
/// onsite bond to |+>|+> and the inter-site bond stabilizers to cluster
/// stabilizers.
CliffordCircuit onsite_circuit(const SiteChain& chain);

/// Gate-by-gate dense state update.
StateVector apply_circuit(const StateVector& v, const CliffordCircuit& c);

/// CZ on every adjacent pair applied to |+>^n; the +1 eigenstate of every
/// Z_{j-1} X_j Z_{j+1} when periodic.
StateVector cluster_state(int n, Boundary boundary);

}  // namespace sptchain
