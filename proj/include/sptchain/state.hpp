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

#include <complex>
#include <cstdint>
#include <vector>

#include "sptchain/pauli.hpp"

namespace sptchain {

using cplx = std::complex<double>;

/// Dense amplitude array over the 2^n computational basis states. Qubit j
/// maps to bit j of the amplitude index (qubit 0 least significant), bit
/// value 1 meaning |1>.
struct StateVector {
  int n = 0;
  std::vector<cplx> amp;

  StateVector() = default;
  explicit StateVector(int n_qubits);

  static StateVector basis_state(int n, uint64_t index);
  static StateVector zero_state(int n) { return basis_state(n, 0); }
  static StateVector plus_state(int n);

  size_t dim() const { return amp.size(); }
  double norm() const;
  void normalize();
};

StateVector apply_pauli(const PauliString& p, const StateVector& v);

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);

/// <v|P|v>
cplx expectation(const PauliString& p, const StateVector& v);

/// |<a|b>|^2 -- global-phase-free overlap of normalized states.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace sptchain
