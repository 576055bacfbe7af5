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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sptchain {

/// An n-qubit Pauli operator stored in binary-symplectic form.
///
/// The operator is i^phase * X^x * Z^z, with the X factors written to the
/// left of the Z factors. Bit j of a mask addresses qubit j. A site with
/// both bits set is an XZ factor, so the single-qubit Y is (x=1, z=1) with
/// phase 1: Y = i*X*Z. All products track the power of i exactly, giving
/// X*Z = -iY and Z*X = +iY.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);  // identity on n qubits
  PauliString(int n, uint64_t x_mask, uint64_t z_mask, int phase = 0);

  /// Parses text such as "+ZXZII", "-XZ", "+iY", "-iYY". A missing phase
  /// prefix means +1. Qubit 0 is the leftmost character; '_' is accepted
  /// as a synonym for 'I'.
  static PauliString from_string(std::string_view text);

  static PauliString x_string(int n, uint64_t x_mask) { return {n, x_mask, 0, 0}; }
  static PauliString z_string(int n, uint64_t z_mask) { return {n, 0, z_mask, 0}; }

  int qubits() const { return n_; }
  uint64_t x_mask() const { return x_; }
  uint64_t z_mask() const { return z_; }
  int phase() const { return phase_; }  // power of i, in {0,1,2,3}

  int weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
  bool is_hermitian() const;
  bool is_x_type() const { return z_ == 0 && phase_ == 0; }

  std::string str() const;

  /// Operator product with exact phase accumulation.
  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
  int phase_ = 0;
};

/// True iff p and q commute: the symplectic form x_p.z_q + x_q.z_p vanishes
/// mod 2. Phases never affect commutation.
bool commutes(const PauliString& p, const PauliString& q);

struct CliffordGate {
  enum class Kind { Hadamard, ControlledNot, ControlledPhase };
  Kind kind;
  int q0;       // Hadamard target, CNOT control, CZ first qubit
  int q1 = -1;  // CNOT target, CZ second qubit
};

/// Gate list applied in order: gates.front() acts first on states.
struct CliffordCircuit {
  int n = 0;
  std::vector<CliffordGate> gates;

  explicit CliffordCircuit(int n_qubits = 0) : n(n_qubits) {}
  void hadamard(int q);
  void cnot(int control, int target);
  void cz(int a, int b);
};

/// Heisenberg conjugation c * p * c^dagger with exact phase.
PauliString conjugate(const PauliString& p, const CliffordCircuit& c);

/// An independent, pairwise-commuting generator list. Construction rejects
/// non-commuting or GF(2)-dependent generators and any set whose span
/// contains -I (or +-iI).
class StabilizerGroup {
 public:
  StabilizerGroup(int n, std::vector<PauliString> generators);

  int qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  int size() const { return static_cast<int>(generators_.size()); }

 private:
  int n_;
  std::vector<PauliString> generators_;
};

/// Reduced row echelon form over GF(2) (x columns first, then z columns),
/// with phases carried along by operator multiplication. Same span, same
/// generator count, deterministic order.
StabilizerGroup canonicalize(const StabilizerGroup& g);

/// Exact membership including phase.
bool contains(const StabilizerGroup& g, const PauliString& p);

/// Membership of the [x|z] vector in the group's GF(2) rowspace, ignoring
/// the phase.
bool contains_up_to_phase(const StabilizerGroup& g, const PauliString& p);

bool groups_equal(const StabilizerGroup& g1, const StabilizerGroup& g2);

/// Basis (as x masks) of the space of X-type strings commuting with every
/// generator, i.e. the GF(2) kernel of the stacked z masks. Includes any
/// X-type elements of the group itself.
std::vector<uint64_t> x_type_centralizer(const StabilizerGroup& g);

/// Minimum Hamming weight of an X-type string that commutes with all
/// generators but is not in the group (up to phase). Enumerates the
/// centralizer kernel, so it expects the kernel dimension to be small.
/// Returns nullopt when no X-type logical exists.
std::optional<int> classical_distance(const StabilizerGroup& g);

/// Von Neumann entropy, in bits, of the reduction of the pure stabilizer
/// state described by g (which must have exactly n generators) to the
/// qubits in region_mask: |region| - dim{ g in G : supp(g) inside region }.
int stabilizer_entropy(const StabilizerGroup& g, uint64_t region_mask);

}  // namespace sptchain
