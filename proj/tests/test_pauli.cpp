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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "oracles.hpp"
#include "sptchain/hamiltonian.hpp"
#include "sptchain/pauli.hpp"
#include "sptchain/transforms.hpp"

using sptchain::Boundary;
using sptchain::CliffordCircuit;
using sptchain::Model;
using sptchain::PauliString;
using sptchain::StabilizerGroup;

namespace {

PauliString P(const char* text) { return PauliString::from_string(text); }

StabilizerGroup group_of(std::vector<PauliString> gens) {
  const int n = gens.front().qubits();
  return {n, std::move(gens)};
}

}  // namespace

TEST_CASE("single-qubit multiplication table") {
  CHECK(P("X") * P("Z") == P("-iY"));
  CHECK(P("Z") * P("X") == P("+iY"));
  CHECK(P("X") * P("Y") == P("+iZ"));
  CHECK(P("Y") * P("X") == P("-iZ"));
  CHECK(P("Y") * P("Z") == P("+iX"));
  CHECK(P("Z") * P("Y") == P("-iX"));
  for (const char* s : {"X", "Y", "Z", "I"}) CHECK((P(s) * P(s)).is_identity());
}

TEST_CASE("string multiplication against the dense oracle") {
  // Frozen value confirmed by the 16x16 matrix product below.
  const PauliString product = P("ZXZI") * P("IZXZ");
  CHECK(product == P("+ZYYZ"));
  CHECK((oracles::dense_pauli(P("ZXZI")) * oracles::dense_pauli(P("IZXZ")) -
         oracles::dense_pauli(product))
            .norm() == doctest::Approx(0.0));
  CHECK((P("ZXZI") * P("ZXZI")).is_identity());

  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 4);
    const PauliString a = oracles::random_pauli(gen, n);
    const PauliString b = oracles::random_pauli(gen, n);
    CHECK((oracles::dense_pauli(a) * oracles::dense_pauli(b) - oracles::dense_pauli(a * b))
              .norm() < 1e-12);
  }
  CHECK_THROWS(P("XX") * P("X"));
}

TEST_CASE("multiply is associative and hermitian strings square to +I") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 8);
    const PauliString a = oracles::random_pauli(gen, n);
    const PauliString b = oracles::random_pauli(gen, n);
    const PauliString c = oracles::random_pauli(gen, n);
    CHECK((a * b) * c == a * (b * c));
    const PauliString h = oracles::random_pauli(gen, n, true);
    REQUIRE(h.is_hermitian());
    CHECK((h * h).is_identity());
  }
}

TEST_CASE("text round trip and validation") {
  for (const char* text : {"+IXYZ", "-XZ", "+iY", "-iYY", "+ZXZIIIII"}) {
    CHECK(PauliString::from_string(text).str() == text);
  }
  CHECK(P("XZ") == P("+XZ"));
  CHECK(P("_X_") == P("IXI"));
  CHECK(P("iY").phase() == P("+iY").phase());
  CHECK(P("ZXZ").weight() == 3);
  CHECK(P("IYI").weight() == 1);
  CHECK_THROWS(PauliString::from_string(""));
  CHECK_THROWS(PauliString::from_string("+"));
  CHECK_THROWS(PauliString::from_string("XQ"));
  CHECK_THROWS(PauliString(2, 0b100, 0, 0));

  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const PauliString p = oracles::random_pauli(gen, 1 + static_cast<int>(gen() % 12));
    CHECK(PauliString::from_string(p.str()) == p);
  }
}

TEST_CASE("commutes matches the dense commutator exhaustively up to n=4") {
  for (int n = 1; n <= 4; ++n) {
    const int opts = 1 << (2 * n);
    std::vector<PauliString> ops;
    std::vector<oracles::MatrixXcd> dense;
    for (int code = 0; code < opts; ++code) {
      const uint64_t x = code & ((1 << n) - 1);
      const uint64_t z = (code >> n) & ((1 << n) - 1);
      ops.emplace_back(n, x, z, std::popcount(x & z) & 1);
      dense.push_back(oracles::dense_pauli(ops.back()));
    }
    // Exhaustive for n <= 3; sampled stride at n=4 keeps the suite fast.
    const int stride = n < 4 ? 1 : 7;
    for (int i = 0; i < opts; ++i) {
      for (int j = i; j < opts; j += stride) {
        const bool impl = commutes(ops[i], ops[j]);
        const bool oracle = (dense[i] * dense[j] - dense[j] * dense[i]).norm() < 1e-12;
        REQUIRE(impl == oracle);
      }
    }
  }
}

TEST_CASE("commutation of the paper-level witnesses") {
  CHECK_FALSE(commutes(P("X"), P("Z")));
  const int n = 8;
  const PauliString z1 = PauliString::z_string(n, 1);
  for (const PauliString& g : sptchain::stabilizer_terms(Model::cluster, n, Boundary::open)) {
    CHECK(commutes(z1, g));
  }
  // Odd-sublattice X product against a bulk generator, checked by the dense
  // commutator on 8 qubits.
  const PauliString xbar = P("XIXIXIXI");
  const PauliString gen = P("IIZXZIII");
  CHECK(commutes(xbar, gen));
  CHECK((oracles::dense_pauli(xbar) * oracles::dense_pauli(gen) -
         oracles::dense_pauli(gen) * oracles::dense_pauli(xbar))
            .norm() == doctest::Approx(0.0));
}

TEST_CASE("canonicalize preserves the span and is order independent") {
  const StabilizerGroup g = group_of({P("ZZI"), P("IZZ")});
  const StabilizerGroup canon = canonicalize(g);
  CHECK(canon.size() == 2);
  CHECK(contains(g, P("ZIZ")));
  CHECK(contains(canon, P("ZIZ")));

  const StabilizerGroup reversed = group_of({P("IZZ"), P("ZZI")});
  CHECK(canonicalize(reversed).generators() == canon.generators());

  const StabilizerGroup cluster8 = sptchain::code_group(Model::cluster, 8);
  const StabilizerGroup canon8 = canonicalize(cluster8);
  CHECK(canon8.size() == 6);
  CHECK(oracles::gf2_rank(oracles::symplectic_rows(cluster8)) == 6);

  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 32; ++trial) {
    PauliString prod(8);
    for (const PauliString& s : cluster8.generators()) {
      if (gen() & 1) prod *= s;
    }
    CHECK(contains(cluster8, prod) == contains(canon8, prod));
    CHECK(contains(cluster8, prod));
  }
}

TEST_CASE("group construction rejects invalid generator sets") {
  CHECK_THROWS(group_of({P("XI"), P("ZI")}));            // anticommuting
  CHECK_THROWS(group_of({P("ZZ"), P("ZZ")}));            // dependent
  CHECK_THROWS(group_of({P("ZZ"), P("-ZZ")}));           // -I in the span
  CHECK_THROWS(group_of({P("XX"), P("ZZ"), P("-YY")}));  // dependent: XX * ZZ = -YY
  CHECK_THROWS(group_of({P("XX"), P("ZZ"), P("YY")}));   // XX * ZZ * YY = -I
  CHECK_NOTHROW(group_of({P("XX"), P("ZZ")}));
}

TEST_CASE("contains checks the phase exactly") {
  const StabilizerGroup g = group_of({P("ZZI"), P("IZZ")});
  CHECK(contains(g, P("ZIZ")));
  CHECK_FALSE(contains(g, P("-ZIZ")));
  CHECK(contains(g, P("III")));

  const StabilizerGroup single = group_of({P("ZZ")});
  CHECK(contains(single, P("ZZ")));
  CHECK_FALSE(contains(single, P("-ZZ")));
  CHECK(contains_up_to_phase(single, P("-ZZ")));

  // Product of the four odd-center periodic generators is the odd X product.
  const StabilizerGroup periodic8 =
      group_of(sptchain::stabilizer_terms(Model::cluster, 8, Boundary::periodic));
  PauliString explicit_product(8);
  for (int j = 1; j <= 8; j += 2) {
    explicit_product *= sptchain::stabilizer_terms(Model::cluster, 8, Boundary::periodic)[j - 1];
  }
  CHECK(explicit_product == P("XIXIXIXI"));
  CHECK(contains(periodic8, P("XIXIXIXI")));
}

TEST_CASE("groups_equal compares spans with phases") {
  const int n = 8;
  std::vector<PauliString> open_plus = sptchain::stabilizer_terms(Model::cluster, n, Boundary::open);
  for (PauliString& s : sptchain::symmetry_generators({Model::cluster, n, 0.0, Boundary::open})) {
    open_plus.push_back(std::move(s));
  }
  const StabilizerGroup lhs = group_of(open_plus);
  const StabilizerGroup rhs = group_of(sptchain::stabilizer_terms(Model::cluster, n, Boundary::periodic));
  CHECK(groups_equal(lhs, rhs));

  std::vector<PauliString> reordered(open_plus.rbegin(), open_plus.rend());
  CHECK(groups_equal(lhs, group_of(reordered)));

  const StabilizerGroup syb = group_of(sptchain::stabilizer_terms(Model::symmetry_breaking, n, Boundary::open));
  const StabilizerGroup clu = group_of(sptchain::stabilizer_terms(Model::cluster, n, Boundary::open));
  CHECK_FALSE(groups_equal(clu, syb));
}

namespace {

// Every X mask commuting with all generators, by explicit enumeration.
std::set<uint64_t> enumerate_centralizer(const StabilizerGroup& g) {
  std::set<uint64_t> out;
  for (uint64_t mask = 0; mask < (1ull << g.qubits()); ++mask) {
    bool ok = true;
    for (const PauliString& s : g.generators()) {
      if (std::popcount(mask & s.z_mask()) & 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(mask);
  }
  return out;
}

std::set<uint64_t> span_of(const std::vector<uint64_t>& basis) {
  std::set<uint64_t> out;
  for (uint64_t pick = 0; pick < (1ull << basis.size()); ++pick) {
    uint64_t m = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
      if ((pick >> i) & 1) m ^= basis[i];
    }
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("x_type_centralizer equals the enumerated kernel") {
  const StabilizerGroup cluster4 = sptchain::code_group(Model::cluster, 4);
  const auto basis4 = x_type_centralizer(cluster4);
  CHECK(span_of(basis4) == enumerate_centralizer(cluster4));
  CHECK(span_of(basis4) == span_of({0b0101ull, 0b1010ull}));  // X1X3, X2X4

  const StabilizerGroup zxxz9 = sptchain::code_group(Model::zxxz, 9);
  const auto basis9 = x_type_centralizer(zxxz9);
  CHECK(basis9.size() == 3);
  CHECK(span_of(basis9) == enumerate_centralizer(zxxz9));
  for (uint64_t logical : {0b001001001ull, 0b010010010ull, 0b100100100ull}) {
    CHECK(span_of(basis9).count(logical) == 1);
  }

  const StabilizerGroup empty3(3, {});
  CHECK(span_of(x_type_centralizer(empty3)).size() == 8);
}

TEST_CASE("classical distance on the named small codes") {
  auto d4 = classical_distance(sptchain::code_group(Model::cluster, 4));
  REQUIRE(d4.has_value());
  CHECK(*d4 == 2);

  auto d9 = classical_distance(sptchain::code_group(Model::zxxz, 9));
  REQUIRE(d9.has_value());
  CHECK(*d9 == 3);

  const StabilizerGroup pair = group_of({P("ZZ")});
  auto d_pair = classical_distance(pair);
  REQUIRE(d_pair.has_value());
  CHECK(*d_pair == 2);
  CHECK(oracles::brute_force_classical_distance(pair) == d_pair);

  CHECK_THROWS(classical_distance(group_of({P("XX"), P("ZZ")})));  // full rank, not a code
}

TEST_CASE("classical distance matches brute force across the model families") {
  for (int n = 4; n <= 15; ++n) {
    const StabilizerGroup g = sptchain::code_group(Model::cluster, n);
    const auto fast = classical_distance(g);
    REQUIRE(fast.has_value());
    CHECK(*fast == n / 2);
    CHECK(oracles::brute_force_classical_distance(g) == fast);

    const StabilizerGroup s = sptchain::code_group(Model::symmetry_breaking, n);
    const auto fast_s = classical_distance(s);
    REQUIRE(fast_s.has_value());
    CHECK(*fast_s == n / 2);
    CHECK(oracles::brute_force_classical_distance(s) == fast_s);
  }
  for (int n = 6; n <= 15; ++n) {
    const StabilizerGroup g = sptchain::code_group(Model::zxxz, n);
    const auto fast = classical_distance(g);
    REQUIRE(fast.has_value());
    CHECK(*fast == n / 3);
    CHECK(oracles::brute_force_classical_distance(g) == fast);
  }
}

TEST_CASE("Z_1 witnesses quantum distance 1 on the open cluster chain") {
  for (int n = 4; n <= 12; ++n) {
    const StabilizerGroup g = sptchain::code_group(Model::cluster, n);
    const PauliString z1 = PauliString::z_string(n, 1);
    for (const PauliString& s : g.generators()) CHECK(commutes(z1, s));
    CHECK_FALSE(contains(g, z1));
    CHECK_FALSE(contains_up_to_phase(g, z1));
  }
}

TEST_CASE("stabilizer entropy of the named states") {
  const StabilizerGroup bond = group_of({P("XX"), P("ZZ")});
  CHECK(stabilizer_entropy(bond, 0b01) == 1);
  CHECK(stabilizer_entropy(bond, 0b10) == 1);
  CHECK(stabilizer_entropy(bond, 0b11) == 0);

  std::vector<PauliString> plus_gens;
  for (int j = 0; j < 6; ++j) plus_gens.push_back(PauliString::x_string(6, 1ull << j));
  const StabilizerGroup plus6 = group_of(plus_gens);
  for (uint64_t region : {0b1ull, 0b111ull, 0b101010ull}) {
    CHECK(stabilizer_entropy(plus6, region) == 0);
  }

  const StabilizerGroup ring12 =
      group_of(sptchain::stabilizer_terms(Model::cluster, 12, Boundary::periodic));
  CHECK(stabilizer_entropy(ring12, 0b000000001111ull) == 2);

  CHECK_THROWS(stabilizer_entropy(group_of({P("ZZ")}), 0b01));  // not full rank
}

TEST_CASE("stabilizer entropy is complement-symmetric for random pure states") {
  std::mt19937_64 gen(23);
  for (int n = 2; n <= 8; ++n) {
    sptchain::CliffordCircuit c = oracles::random_circuit(gen, n, 4 * n);
    std::vector<PauliString> gens;
    for (int j = 0; j < n; ++j) {
      gens.push_back(conjugate(PauliString::z_string(n, 1ull << j), c));
    }
    const StabilizerGroup g = group_of(gens);
    const uint64_t all = (1ull << n) - 1;
    for (uint64_t region = 0; region <= all; ++region) {
      CHECK(stabilizer_entropy(g, region) == stabilizer_entropy(g, all & ~region));
    }
  }
}

TEST_CASE("conjugation by named gates") {
  CliffordCircuit h1(1);
  h1.hadamard(0);
  CHECK(conjugate(P("X"), h1) == P("Z"));
  CHECK(conjugate(P("Z"), h1) == P("X"));
  CHECK(conjugate(P("Y"), h1) == P("-Y"));

  CliffordCircuit cnot(2);
  cnot.cnot(0, 1);
  CHECK(conjugate(P("XI"), cnot) == P("XX"));
  CHECK(conjugate(P("IZ"), cnot) == P("ZZ"));
  CHECK(conjugate(P("IX"), cnot) == P("IX"));
  CHECK(conjugate(P("ZI"), cnot) == P("ZI"));

  CliffordCircuit cz(2);
  cz.cz(0, 1);
  CHECK(conjugate(P("XI"), cz) == P("XZ"));
  CHECK(conjugate(P("IX"), cz) == P("ZX"));
}

TEST_CASE("conjugation agrees with the dense unitary oracle") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 4);
    const CliffordCircuit c = oracles::random_circuit(gen, n, 10);
    const PauliString p = oracles::random_pauli(gen, n);
    const oracles::MatrixXcd u = oracles::dense_circuit_unitary(c);
    const oracles::MatrixXcd expected = u * oracles::dense_pauli(p) * u.adjoint();
    CHECK((expected - oracles::dense_pauli(conjugate(p, c))).norm() < 1e-12);
  }
}

TEST_CASE("conjugation preserves commutation relations") {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 6);
    const CliffordCircuit c = oracles::random_circuit(gen, n, 14);
    const PauliString p = oracles::random_pauli(gen, n);
    const PauliString q = oracles::random_pauli(gen, n);
    CHECK(commutes(p, q) == commutes(conjugate(p, c), conjugate(q, c)));
  }
}
