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

#include "sptchain/pauli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sptchain {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("qubit count must be in [1, 63], got " + std::to_string(n));
  }
}

void check_same_size(const PauliString& p, const PauliString& q) {
  if (p.qubits() != q.qubits()) {
    throw std::invalid_argument("qubit count mismatch: " + std::to_string(p.qubits()) +
                                " vs " + std::to_string(q.qubits()));
  }
}

int parity(uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

PauliString::PauliString(int n) : n_(n) { check_qubit_count(n); }

PauliString::PauliString(int n, uint64_t x_mask, uint64_t z_mask, int phase)
    : n_(n), x_(x_mask), z_(z_mask), phase_(((phase % 4) + 4) % 4) {
  check_qubit_count(n);
  if ((x_mask | z_mask) & ~((1ull << n) - 1)) {
    throw std::invalid_argument("mask has bits at positions >= n");
  }
}

PauliString PauliString::from_string(std::string_view text) {
  int phase = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("i")) {
    phase = 1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  const int n = static_cast<int>(text.size());
  check_qubit_count(n);
  uint64_t x = 0, z = 0;
  int y_count = 0;
  for (int j = 0; j < n; ++j) {
    switch (text[j]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= 1ull << j;
        break;
      case 'Z':
        z |= 1ull << j;
        break;
      case 'Y':
        x |= 1ull << j;
        z |= 1ull << j;
        ++y_count;
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli character '") + text[j] + "'");
    }
  }
  // Each displayed Y stands for i*X*Z, so the stored power of i absorbs one
  // factor per Y site.
  return {n, x, z, phase + y_count};
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

bool PauliString::is_hermitian() const {
  // (i^p X^a Z^b)^dagger = i^{-p} (-1)^{|a&b|} X^a Z^b, so Hermitian iff
  // the phase parity matches the X/Z overlap parity.
  return (phase_ & 1) == parity(x_ & z_);
}

std::string PauliString::str() const {
  const int y_count = std::popcount(x_ & z_);
  const int display = ((phase_ - y_count) % 4 + 4) % 4;
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string out = prefix[display];
  for (int j = 0; j < n_; ++j) {
    const bool xb = (x_ >> j) & 1, zb = (z_ >> j) & 1;
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  check_same_size(*this, rhs);
  // (i^p X^a Z^b)(i^q X^c Z^d): moving Z^b across X^c costs (-1)^{|b&c|}.
  phase_ = (phase_ + rhs.phase_ + 2 * parity(z_ & rhs.x_)) & 3;
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  return *this;
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  return (parity(p.x_mask() & q.z_mask()) ^ parity(q.x_mask() & p.z_mask())) == 0;
}

void CliffordCircuit::hadamard(int q) {
  if (q < 0 || q >= n) throw std::invalid_argument("Hadamard qubit out of range");
  gates.push_back({CliffordGate::Kind::Hadamard, q, -1});
}

void CliffordCircuit::cnot(int control, int target) {
  if (control < 0 || control >= n || target < 0 || target >= n) {
    throw std::invalid_argument("CNOT qubit out of range");
  }
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  gates.push_back({CliffordGate::Kind::ControlledNot, control, target});
}

void CliffordCircuit::cz(int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("CZ qubit out of range");
  if (a == b) throw std::invalid_argument("CZ qubits must differ");
  gates.push_back({CliffordGate::Kind::ControlledPhase, a, b});
}

namespace {

// Image of a single X_q or Z_q factor under one gate. All images carry a +
// phase; arbitrary strings are conjugated by multiplying factor images, so
// no dedicated phase-update rule is needed.
PauliString gate_image(const CliffordGate& g, int n, bool is_x, int q) {
  const uint64_t bit = 1ull << q;
  switch (g.kind) {
    case CliffordGate::Kind::Hadamard:
      if (q == g.q0) return is_x ? PauliString::z_string(n, bit) : PauliString::x_string(n, bit);
      break;
    case CliffordGate::Kind::ControlledNot:
      if (is_x && q == g.q0) return PauliString::x_string(n, bit | (1ull << g.q1));
      if (!is_x && q == g.q1) return PauliString::z_string(n, bit | (1ull << g.q0));
      break;
    case CliffordGate::Kind::ControlledPhase:
      if (is_x && q == g.q0) return {n, bit, 1ull << g.q1, 0};
      if (is_x && q == g.q1) return {n, bit, 1ull << g.q0, 0};
      break;
  }
  return is_x ? PauliString::x_string(n, bit) : PauliString::z_string(n, bit);
}

}  // namespace

PauliString conjugate(const PauliString& p, const CliffordCircuit& c) {
  if (p.qubits() != c.n) throw std::invalid_argument("circuit size does not match operator");
  const int n = p.qubits();
  PauliString cur = p;
  for (const CliffordGate& g : c.gates) {
    // U (i^p X^a Z^b) U^dag = i^p prod_j (U X_j U^dag)^{a_j} prod_j (U Z_j U^dag)^{b_j}
    PauliString next(n, 0, 0, cur.phase());
    for (int j = 0; j < n; ++j) {
      if ((cur.x_mask() >> j) & 1) next *= gate_image(g, n, true, j);
    }
    for (int j = 0; j < n; ++j) {
      if ((cur.z_mask() >> j) & 1) next *= gate_image(g, n, false, j);
    }
    cur = next;
  }
  return cur;
}

namespace {

// Column order for echelon forms: x_0..x_{n-1}, then z_0..z_{n-1}.
int pivot_column(const PauliString& p) {
  if (p.x_mask()) return std::countr_zero(p.x_mask());
  if (p.z_mask()) return p.qubits() + std::countr_zero(p.z_mask());
  return 2 * p.qubits();
}

bool has_column(const PauliString& p, int col) {
  const int n = p.qubits();
  return col < n ? ((p.x_mask() >> col) & 1) : ((p.z_mask() >> (col - n)) & 1);
}

// Phase-tracked reduced row echelon form. Rows with vanished masks are
// dropped; a vanished row with nonzero phase means the span contains -I or
// +-iI. Returns rows sorted by pivot column.
struct EchelonForm {
  std::vector<PauliString> rows;
  bool dependent = false;
  bool contains_minus_identity = false;
};

EchelonForm echelon_form(int n, std::vector<PauliString> rows) {
  EchelonForm out;
  size_t head = 0;
  for (int col = 0; col < 2 * n && head < rows.size(); ++col) {
    size_t pivot = head;
    while (pivot < rows.size() && !has_column(rows[pivot], col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[head], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != head && has_column(rows[i], col)) rows[i] *= rows[head];
    }
    ++head;
  }
  for (size_t i = head; i < rows.size(); ++i) {
    if (rows[i].phase() != 0) out.contains_minus_identity = true;
    out.dependent = true;
  }
  rows.resize(head);
  std::sort(rows.begin(), rows.end(), [](const PauliString& a, const PauliString& b) {
    return pivot_column(a) < pivot_column(b);
  });
  out.rows = std::move(rows);
  return out;
}

// Reduce p against echelon rows; the residual has zero masks iff p's [x|z]
// vector is in the rowspace. The residual phase then decides exact
// membership, because each echelon row is Hermitian and the group abelian.
PauliString reduce_by(const std::vector<PauliString>& echelon_rows, PauliString p) {
  for (const PauliString& row : echelon_rows) {
    if (has_column(p, pivot_column(row))) p = row * p;
  }
  return p;
}

}  // namespace

StabilizerGroup::StabilizerGroup(int n, std::vector<PauliString> generators)
    : n_(n), generators_(std::move(generators)) {
  check_qubit_count(n);
  for (const PauliString& g : generators_) {
    if (g.qubits() != n) throw std::invalid_argument("generator size does not match group");
    if (!g.is_hermitian()) throw std::invalid_argument("generator is not Hermitian: " + g.str());
  }
  for (size_t i = 0; i < generators_.size(); ++i) {
    for (size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commutes(generators_[i], generators_[j])) {
        throw std::invalid_argument("generators do not commute: " + generators_[i].str() +
                                    " vs " + generators_[j].str());
      }
    }
  }
  const EchelonForm ech = echelon_form(n_, generators_);
  if (ech.contains_minus_identity) throw std::invalid_argument("group contains -I");
  if (ech.dependent) throw std::invalid_argument("generators are GF(2)-dependent");
}

StabilizerGroup canonicalize(const StabilizerGroup& g) {
  EchelonForm ech = echelon_form(g.qubits(), g.generators());
  // Construction already rejects dependent rows and -I; echelon_form here
  // only reorders and combines.
  return {g.qubits(), std::move(ech.rows)};
}

bool contains(const StabilizerGroup& g, const PauliString& p) {
  if (p.qubits() != g.qubits()) throw std::invalid_argument("size mismatch in contains");
  const EchelonForm ech = echelon_form(g.qubits(), g.generators());
  return reduce_by(ech.rows, p).is_identity();
}

bool contains_up_to_phase(const StabilizerGroup& g, const PauliString& p) {
  if (p.qubits() != g.qubits()) throw std::invalid_argument("size mismatch in contains");
  const EchelonForm ech = echelon_form(g.qubits(), g.generators());
  const PauliString residual = reduce_by(ech.rows, p);
  return residual.x_mask() == 0 && residual.z_mask() == 0;
}

bool groups_equal(const StabilizerGroup& g1, const StabilizerGroup& g2) {
  if (g1.qubits() != g2.qubits() || g1.size() != g2.size()) return false;
  const EchelonForm e1 = echelon_form(g1.qubits(), g1.generators());
  const EchelonForm e2 = echelon_form(g2.qubits(), g2.generators());
  for (const PauliString& g : g1.generators()) {
    if (!reduce_by(e2.rows, g).is_identity()) return false;
  }
  for (const PauliString& g : g2.generators()) {
    if (!reduce_by(e1.rows, g).is_identity()) return false;
  }
  return true;
}

std::vector<uint64_t> x_type_centralizer(const StabilizerGroup& g) {
  const int n = g.qubits();
  // Kernel of the generators' z-mask matrix: an X-string with mask u
  // commutes with generator s iff |u & z_s| is even.
  std::vector<uint64_t> rows;
  for (const PauliString& s : g.generators()) {
    if (s.z_mask()) rows.push_back(s.z_mask());
  }
  std::vector<int> pivot_of_col(n, -1);
  size_t head = 0;
  for (int col = 0; col < n && head < rows.size(); ++col) {
    size_t pivot = head;
    while (pivot < rows.size() && !((rows[pivot] >> col) & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[head], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != head && ((rows[i] >> col) & 1)) rows[i] ^= rows[head];
    }
    pivot_of_col[col] = static_cast<int>(head);
    ++head;
  }
  rows.resize(head);
  std::vector<uint64_t> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    uint64_t u = 1ull << free_col;
    for (int col = 0; col < n; ++col) {
      const int r = pivot_of_col[col];
      if (r >= 0 && ((rows[r] >> free_col) & 1)) u |= 1ull << col;
    }
    basis.push_back(u);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::optional<int> classical_distance(const StabilizerGroup& g) {
  if (g.size() >= g.qubits()) {
    throw std::invalid_argument("classical_distance expects a code with fewer generators than qubits");
  }
  const std::vector<uint64_t> basis = x_type_centralizer(g);
  if (basis.size() > 24) {
    throw std::runtime_error("centralizer kernel too large to enumerate");
  }
  const EchelonForm ech = echelon_form(g.qubits(), g.generators());
  int best = -1;
  for (uint64_t pick = 1; pick < (1ull << basis.size()); ++pick) {
    uint64_t mask = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
      if ((pick >> i) & 1) mask ^= basis[i];
    }
    if (mask == 0) continue;
    const PauliString candidate = PauliString::x_string(g.qubits(), mask);
    const PauliString residual = reduce_by(ech.rows, candidate);
    if (residual.x_mask() == 0 && residual.z_mask() == 0) continue;  // in the group
    const int w = std::popcount(mask);
    if (best < 0 || w < best) best = w;
  }
  if (best < 0) return std::nullopt;
  return best;
}

int stabilizer_entropy(const StabilizerGroup& g, uint64_t region_mask) {
  const int n = g.qubits();
  if (g.size() != n) {
    throw std::invalid_argument("stabilizer_entropy needs a full-rank (pure-state) group");
  }
  const uint64_t valid = (1ull << n) - 1;
  if (region_mask & ~valid) throw std::invalid_argument("region has qubits >= n");
  const uint64_t complement = valid & ~region_mask;
  // dim{ g in G : supp(g) in region } = n - rank of the generator matrix
  // restricted to the complement columns.
  std::vector<std::pair<uint64_t, uint64_t>> rows;
  rows.reserve(g.size());
  for (const PauliString& s : g.generators()) {
    rows.emplace_back(s.x_mask() & complement, s.z_mask() & complement);
  }
  int rank = 0;
  for (int col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); ++col) {
    const bool is_x = col < n;
    const uint64_t bit = 1ull << (is_x ? col : col - n);
    auto get = [&](const std::pair<uint64_t, uint64_t>& r) {
      return ((is_x ? r.first : r.second) & bit) != 0;
    };
    size_t pivot = rank;
    while (pivot < rows.size() && !get(rows[pivot])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (get(rows[i])) {
        rows[i].first ^= rows[rank].first;
        rows[i].second ^= rows[rank].second;
      }
    }
    ++rank;
  }
  return std::popcount(region_mask) - (n - rank);
}

}  // namespace sptchain
