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

#include "sptchain/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace sptchain {

void SiteChain::validate() const {
  if (n_sites < 2) throw std::invalid_argument("site chain needs at least 2 sites");
  if (qubits() > 26) throw std::invalid_argument("site chain too long for dense states");
}

namespace {

// Tensor product of two-qubit bond states across the given qubit pairs;
// qubits not covered by any pair stay |0>.
StateVector bond_product(int n, const std::vector<std::pair<int, int>>& pairs) {
  StateVector v = StateVector::zero_state(n);
  const double a = 1.0 / std::sqrt(2.0);
  for (const auto& [p, q] : pairs) {
    // (|00> + |11>)/sqrt(2) on (p, q): spread each occupied amplitude.
    const uint64_t both = (1ull << p) | (1ull << q);
    for (uint64_t b = 0; b < v.dim(); ++b) {
      if ((b & both) == 0 && v.amp[b] != cplx{0.0, 0.0}) {
        const cplx w = v.amp[b] * a;
        v.amp[b] = w;
        v.amp[b | both] = w;
      }
    }
  }
  return v;
}

}  // namespace

StateVector build_psi_a(const SiteChain& chain) {
  chain.validate();
  std::vector<std::pair<int, int>> pairs;
  const int last = chain.boundary == Boundary::open ? chain.n_sites - 1 : chain.n_sites;
  for (int i = 0; i < last; ++i) {
    pairs.emplace_back(chain.right(i), chain.left((i + 1) % chain.n_sites));
  }
  return bond_product(chain.qubits(), pairs);
}

StateVector build_psi_b(const SiteChain& chain) {
  chain.validate();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < chain.n_sites; ++i) pairs.emplace_back(chain.left(i), chain.right(i));
  return bond_product(chain.qubits(), pairs);
}

CliffordCircuit onsite_circuit(const SiteChain& chain) {
  chain.validate();
  CliffordCircuit c(chain.qubits());
  for (int i = 0; i < chain.n_sites; ++i) {
    c.cnot(chain.left(i), chain.right(i));
    c.hadamard(chain.right(i));
  }
  return c;
}

StateVector apply_circuit(const StateVector& v, const CliffordCircuit& c) {
  if (v.n != c.n) throw std::invalid_argument("circuit size does not match state");
  StateVector out = v;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const CliffordGate& g : c.gates) {
    switch (g.kind) {
      case CliffordGate::Kind::Hadamard: {
        const uint64_t bit = 1ull << g.q0;
        for (uint64_t b = 0; b < out.dim(); ++b) {
          if (b & bit) continue;
          const cplx lo = out.amp[b], hi = out.amp[b | bit];
          out.amp[b] = (lo + hi) * inv_sqrt2;
          out.amp[b | bit] = (lo - hi) * inv_sqrt2;
        }
        break;
      }
      case CliffordGate::Kind::ControlledNot: {
        const uint64_t ctrl = 1ull << g.q0, tgt = 1ull << g.q1;
        for (uint64_t b = 0; b < out.dim(); ++b) {
          if ((b & ctrl) && !(b & tgt)) std::swap(out.amp[b], out.amp[b | tgt]);
        }
        break;
      }
      case CliffordGate::Kind::ControlledPhase: {
        const uint64_t both = (1ull << g.q0) | (1ull << g.q1);
        for (uint64_t b = 0; b < out.dim(); ++b) {
          if ((b & both) == both) out.amp[b] = -out.amp[b];
        }
        break;
      }
    }
  }
  return out;
}

StateVector cluster_state(int n, Boundary boundary) {
  if (n < 3) throw std::invalid_argument("cluster state needs at least 3 qubits");
  CliffordCircuit c(n);
  for (int j = 0; j + 1 < n; ++j) c.cz(j, j + 1);
  if (boundary == Boundary::periodic) c.cz(n - 1, 0);
  return apply_circuit(StateVector::plus_state(n), c);
}

}  // namespace sptchain
