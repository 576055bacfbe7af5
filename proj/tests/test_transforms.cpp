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

#include "oracles.hpp"
#include "sptchain/entropy.hpp"
#include "sptchain/transforms.hpp"

using namespace sptchain;

namespace {
PauliString P(const char* text) { return PauliString::from_string(text); }
}

TEST_CASE("apply_circuit matches the dense unitary oracle") {
  std::mt19937_64 gen(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5);
    const CliffordCircuit c = oracles::random_circuit(gen, n, 12);
    const StateVector v = oracles::random_state(gen, n);
    const StateVector got = apply_circuit(v, c);
    const oracles::MatrixXcd u = oracles::dense_circuit_unitary(c);
    const Eigen::VectorXcd expect =
        u * Eigen::Map<const Eigen::VectorXcd>(v.amp.data(), v.amp.size());
    for (size_t i = 0; i < got.amp.size(); ++i) {
      REQUIRE(std::abs(got.amp[i] - expect(i)) < 1e-12);
    }
    CHECK(std::abs(got.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("Hadamard on |0> gives |+>") {
  CliffordCircuit c(1);
  c.hadamard(0);
  const StateVector plus = apply_circuit(StateVector::zero_state(1), c);
  CHECK(fidelity(plus, StateVector::plus_state(1)) == doctest::Approx(1.0));
}

TEST_CASE("CZ chain on |+>^N builds the cluster state stabilizers") {
  const int n = 8;
  const StateVector cl = cluster_state(n, Boundary::periodic);
  for (const PauliString& g : stabilizer_terms(Model::cluster, n, Boundary::periodic)) {
    const cplx ev = expectation(g, cl);
    CHECK(std::abs(ev - cplx{1.0, 0.0}) < 1e-12);
  }
  // Open chain: bulk generators only.
  const StateVector cl_open = cluster_state(n, Boundary::open);
  for (const PauliString& g : stabilizer_terms(Model::cluster, n, Boundary::open)) {
    CHECK(std::abs(expectation(g, cl_open) - cplx{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("psi_a bond structure") {
  // Periodic two-site ring: Bell pairs on (1_r, 2_l) and (2_r, 1_l); every
  // single-qubit marginal is maximally mixed.
  const SiteChain ring2{2, Boundary::periodic};
  const StateVector psi = build_psi_a(ring2);
  for (int q = 0; q < 4; ++q) {
    CHECK(region_entropy(psi, 1ull << q) == doctest::Approx(1.0));
  }

  // One full site of a three-site ring holds exactly two bond halves.
  const SiteChain ring3{3, Boundary::periodic};
  const StateVector psi3 = build_psi_a(ring3);
  const StabilizerGroup bond_group(6, [&] {
    std::vector<PauliString> gens;
    for (int i = 0; i < 3; ++i) {
      const uint64_t pair =
          (1ull << ring3.right(i)) | (1ull << ring3.left((i + 1) % 3));
      gens.push_back(PauliString::x_string(6, pair));
      gens.push_back(PauliString::z_string(6, pair));
    }
    return gens;
  }());
  for (int site = 0; site < 3; ++site) {
    const uint64_t region = (1ull << ring3.left(site)) | (1ull << ring3.right(site));
    CHECK(region_entropy(psi3, region) == doctest::Approx(2.0));
    CHECK(stabilizer_entropy(bond_group, region) == 2);
  }

  // Open chain: unpaired edge qubits are |0> and carry no entropy.
  const SiteChain open2{2, Boundary::open};
  const StateVector psi_open = build_psi_a(open2);
  CHECK(region_entropy(psi_open, 1ull << open2.left(0)) == doctest::Approx(0.0));
  CHECK(region_entropy(psi_open, 1ull << open2.right(1)) == doctest::Approx(0.0));
  CHECK(region_entropy(psi_open, (1ull << open2.right(0)) | (1ull << open2.left(1))) ==
        doctest::Approx(0.0));
}

TEST_CASE("psi_b is a product state across sites") {
  const SiteChain chain{3, Boundary::periodic};
  const StateVector psi = build_psi_b(chain);
  for (int cut = 1; cut < 3; ++cut) {
    CHECK(region_entropy(psi, (1ull << (2 * cut)) - 1) == doctest::Approx(0.0));
  }
  // Two sites: |w> (x) |w> on (1_l,1_r),(2_l,2_r).
  const SiteChain two{2, Boundary::open};
  const StateVector psi2 = build_psi_b(two);
  StateVector expected(4);
  for (uint64_t a : {0ull, 3ull}) {
    for (uint64_t b : {0ull, 3ull}) expected.amp[(b << 2) | a] = 0.5;
  }
  CHECK(fidelity(psi2, expected) == doctest::Approx(1.0));

  const TopoEntropyRecord rec = topo_entropy(build_psi_b({4, Boundary::open}),
                                             layout_from_ends(8, CutKind::tripartite, {2, 6}));
  CHECK(rec.s_topo == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("the onsite circuit maps each bond to |+>|+>") {
  const SiteChain one_site_pair{2, Boundary::open};
  const CliffordCircuit u = onsite_circuit(one_site_pair);
  const StateVector mapped = apply_circuit(build_psi_b(one_site_pair), u);
  CHECK(fidelity(mapped, StateVector::plus_state(4)) > 1.0 - 1e-12);
}

TEST_CASE("onsite conjugation reproduces the bond-to-cluster mapping exactly") {
  const SiteChain chain{2, Boundary::open};
  const CliffordCircuit u = onsite_circuit(chain);
  CHECK(conjugate(P("IXXI"), u) == P("IZXZ"));
  CHECK(conjugate(P("IZZI"), u) == P("ZXZI"));

  // Same mapping inside a longer chain, acting on the middle bond.
  const SiteChain chain3{3, Boundary::open};
  const CliffordCircuit u3 = onsite_circuit(chain3);
  CHECK(conjugate(P("IIIXXI"), u3) == P("IIIZXZ"));
  CHECK(conjugate(P("IIIZZI"), u3) == P("IIZXZI"));
}

TEST_CASE("psi_a maps to the periodic cluster state") {
  for (int sites = 2; sites <= 6; ++sites) {
    const SiteChain chain{sites, Boundary::periodic};
    const StateVector mapped = apply_circuit(build_psi_a(chain), onsite_circuit(chain));
    const StateVector cl = cluster_state(2 * sites, Boundary::periodic);
    CHECK(fidelity(mapped, cl) > 1.0 - 1e-12);
  }
}

TEST_CASE("psi_b maps to the plus product state") {
  for (int sites = 2; sites <= 6; ++sites) {
    const SiteChain chain{sites, Boundary::periodic};
    const StateVector mapped = apply_circuit(build_psi_b(chain), onsite_circuit(chain));
    CHECK(fidelity(mapped, StateVector::plus_state(2 * sites)) > 1.0 - 1e-12);
  }
}

TEST_CASE("the onsite circuit is not an involution") {
  const SiteChain chain{2, Boundary::periodic};
  const CliffordCircuit u = onsite_circuit(chain);
  const StateVector psi = build_psi_b(chain);
  const StateVector twice = apply_circuit(apply_circuit(psi, u), u);
  CHECK(fidelity(twice, psi) < 0.99);
}

TEST_CASE("operator-level and state-level transforms agree") {
  const SiteChain chain{4, Boundary::periodic};
  const CliffordCircuit u = onsite_circuit(chain);
  const StateVector mapped = apply_circuit(build_psi_a(chain), u);
  const int n = chain.qubits();
  for (int i = 0; i < chain.n_sites; ++i) {
    const uint64_t pair =
        (1ull << chain.right(i)) | (1ull << chain.left((i + 1) % chain.n_sites));
    for (const PauliString& bond :
         {PauliString::x_string(n, pair), PauliString::z_string(n, pair)}) {
      CHECK(std::abs(expectation(conjugate(bond, u), mapped) - cplx{1.0, 0.0}) < 1e-10);
    }
  }
}
