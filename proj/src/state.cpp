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

#include "sptchain/state.hpp"

#include <cmath>
#include <stdexcept>

#include "sptchain/kernels.hpp"

namespace sptchain {

namespace {

constexpr int kMaxStateQubits = 26;  // 1 GiB of amplitudes

void check_state_size(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw std::invalid_argument("state size must be in [1, " +
                                std::to_string(kMaxStateQubits) + "] qubits");
  }
}

void check_match(const StateVector& v, int n) {
  if (v.n != n || v.amp.size() != (size_t{1} << v.n)) {
    throw std::invalid_argument("state size mismatch");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n(n_qubits) {
  check_state_size(n_qubits);
  amp.assign(size_t{1} << n_qubits, cplx{0.0, 0.0});
}

StateVector StateVector::basis_state(int n, uint64_t index) {
  StateVector v(n);
  if (index >= v.dim()) throw std::invalid_argument("basis index out of range");
  v.amp[index] = 1.0;
  return v;
}

StateVector StateVector::plus_state(int n) {
  StateVector v(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(v.dim()));
  for (auto& c : v.amp) c = a;
  return v;
}

double StateVector::norm() const {
  return std::sqrt(kernels::active().norm_sq(amp.data(), amp.size()));
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::runtime_error("cannot normalize the zero vector");
  kernels::active().scale(amp.data(), amp.size(), cplx{1.0 / nrm, 0.0});
}

StateVector apply_pauli(const PauliString& p, const StateVector& v) {
  check_match(v, p.qubits());
  static const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  StateVector out(v.n);
  kernels::active().pauli_term(out.amp.data(), v.amp.data(), v.dim(), p.x_mask(), p.z_mask(),
                               i_pow[p.phase()]);
  return out;
}

cplx inner(const StateVector& a, const StateVector& b) {
  check_match(b, a.n);
  return kernels::active().dot(a.amp.data(), b.amp.data(), a.amp.size());
}

cplx expectation(const PauliString& p, const StateVector& v) {
  const StateVector pv = apply_pauli(p, v);
  return inner(v, pv);
}

double fidelity(const StateVector& a, const StateVector& b) {
  const cplx ov = inner(a, b);
  return std::norm(ov);
}

}  // namespace sptchain
