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

#include "sptchain/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sptchain/kernels.hpp"

namespace sptchain {

Model model_from_name(const std::string& name) {
  if (name == "clu") return Model::cluster;
  if (name == "syb") return Model::symmetry_breaking;
  if (name == "zxxz") return Model::zxxz;
  throw std::invalid_argument("unknown model '" + name + "' (expected clu, syb, or zxxz)");
}

std::string model_name(Model m) {
  switch (m) {
    case Model::cluster: return "clu";
    case Model::symmetry_breaking: return "syb";
    case Model::zxxz: return "zxxz";
  }
  throw std::invalid_argument("unknown model");
}

Boundary boundary_from_name(const std::string& name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  throw std::invalid_argument("unknown boundary '" + name + "' (expected open or periodic)");
}

std::string boundary_name(Boundary b) {
  return b == Boundary::open ? "open" : "periodic";
}

int model_min_qubits(Model m) { return m == Model::zxxz ? 6 : 4; }

void ModelSpec::validate() const {
  if (n < model_min_qubits(model)) {
    throw std::invalid_argument(model_name(model) + " needs at least " +
                                std::to_string(model_min_qubits(model)) + " qubits, got " +
                                std::to_string(n));
  }
  if (n > 26) throw std::invalid_argument("chain too long for dense state vectors");
  if (!(field_b >= 0.0) || !std::isfinite(field_b)) {
    throw std::invalid_argument("field strength must be finite and >= 0");
  }
}

PauliSumOperator::PauliSumOperator(int n_qubits,
                                   std::vector<std::pair<double, PauliString>> term_list)
    : n(n_qubits), terms(std::move(term_list)) {
  for (const auto& [coeff, op] : terms) {
    if (op.qubits() != n) throw std::invalid_argument("operator term size mismatch");
    if (!std::isfinite(coeff)) throw std::invalid_argument("non-finite coefficient");
    if (!op.is_hermitian() || (op.phase() & 1)) {
      throw std::invalid_argument("operator term must be a +-1 signed Hermitian string: " +
                                  op.str());
    }
  }
}

namespace {

// Stabilizer centered at 1-based position j (three-body) or starting pair
// (j, j+1) (four-body); indices taken mod n for periodic chains.
PauliString three_body_term(Model m, int n, int center_1based) {
  auto wrap = [&](int q) { return ((q - 1) % n + n) % n; };  // 1-based -> 0-based
  const uint64_t left = 1ull << wrap(center_1based - 1);
  const uint64_t mid = 1ull << wrap(center_1based);
  const uint64_t right = 1ull << wrap(center_1based + 1);
  if (m == Model::symmetry_breaking) return PauliString(n, 0, left | right, 0);
  return PauliString(n, mid, left | right, 0);  // Z X Z
}

PauliString four_body_term(int n, int j_1based) {
  auto wrap = [&](int q) { return ((q - 1) % n + n) % n; };
  const uint64_t x = (1ull << wrap(j_1based)) | (1ull << wrap(j_1based + 1));
  const uint64_t z = (1ull << wrap(j_1based - 1)) | (1ull << wrap(j_1based + 2));
  return PauliString(n, x, z, 0);
}

}  // namespace

std::vector<PauliString> stabilizer_terms(Model m, int n, Boundary boundary) {
  ModelSpec probe{m, n, 0.0, boundary};
  probe.validate();
  std::vector<PauliString> out;
  if (m == Model::zxxz) {
    const int lo = boundary == Boundary::open ? 2 : 1;
    const int hi = boundary == Boundary::open ? n - 2 : n;
    for (int j = lo; j <= hi; ++j) out.push_back(four_body_term(n, j));
  } else {
    const int lo = boundary == Boundary::open ? 2 : 1;
    const int hi = boundary == Boundary::open ? n - 1 : n;
    for (int j = lo; j <= hi; ++j) out.push_back(three_body_term(m, n, j));
  }
  return out;
}

PauliSumOperator build(const ModelSpec& spec) {
  spec.validate();
  std::vector<std::pair<double, PauliString>> terms;
  for (PauliString& s : stabilizer_terms(spec.model, spec.n, spec.boundary)) {
    terms.emplace_back(-1.0, std::move(s));
  }
  if (spec.field_b != 0.0) {
    for (int j = 0; j < spec.n; ++j) {
      terms.emplace_back(spec.field_b, PauliString::x_string(spec.n, 1ull << j));
    }
  }
  return {spec.n, std::move(terms)};
}

std::vector<PauliString> symmetry_generators(const ModelSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<PauliString> out;
  if (spec.model == Model::zxxz) {
    for (int r = 0; r < 3; ++r) {
      uint64_t mask = 0;
      for (int q = r; q < n; q += 3) mask |= 1ull << q;
      out.push_back(PauliString::x_string(n, mask));
    }
  } else {
    uint64_t odd = 0, even = 0;  // 1-based parity classes
    for (int q = 0; q < n; ++q) ((q % 2 == 0) ? odd : even) |= 1ull << q;
    out.push_back(PauliString::x_string(n, odd));
    out.push_back(PauliString::x_string(n, even));
  }
  return out;
}

StabilizerGroup code_group(Model m, int n) {
  return {n, stabilizer_terms(m, n, Boundary::open)};
}

StabilizerGroup symmetric_state_group(Model m, int n) {
  std::vector<PauliString> gens = stabilizer_terms(m, n, Boundary::open);
  for (PauliString& s : symmetry_generators({m, n, 0.0, Boundary::open})) {
    gens.push_back(std::move(s));
  }
  return {n, std::move(gens)};
}

void apply(const PauliSumOperator& h, const StateVector& in, StateVector& out) {
  if (in.n != h.n || in.amp.size() != (size_t{1} << h.n)) {
    throw std::invalid_argument("state dimension does not match operator");
  }
  if (out.n != in.n || out.amp.size() != in.amp.size()) out = StateVector(in.n);
  else std::fill(out.amp.begin(), out.amp.end(), cplx{0.0, 0.0});
  const auto& k = kernels::active();
  for (const auto& [coeff, op] : h.terms) {
    // Term phases are restricted to {0, 2}, so the weight stays real.
    const double w = op.phase() == 2 ? -coeff : coeff;
    k.pauli_term(out.amp.data(), in.amp.data(), in.amp.size(), op.x_mask(), op.z_mask(),
                 cplx{w, 0.0});
  }
}

StateVector apply(const PauliSumOperator& h, const StateVector& in) {
  StateVector out(in.n);
  apply(h, in, out);
  return out;
}

}  // namespace sptchain
