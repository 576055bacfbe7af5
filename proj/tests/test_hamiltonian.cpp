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
#include "sptchain/hamiltonian.hpp"
#include "sptchain/spectra.hpp"
#include "sptchain/transforms.hpp"

using namespace sptchain;

namespace {
PauliString P(const char* text) { return PauliString::from_string(text); }
}

TEST_CASE("build produces the advertised term lists") {
  const PauliSumOperator open8 = build({Model::cluster, 8, 0.0, Boundary::open});
  REQUIRE(open8.terms.size() == 6);
  for (int j = 0; j < 6; ++j) {
    CHECK(open8.terms[j].first == -1.0);
    std::string expected(8, 'I');
    expected[j] = 'Z';
    expected[j + 1] = 'X';
    expected[j + 2] = 'Z';
    CHECK(open8.terms[j].second == P(("+" + expected).c_str()));
  }

  CHECK(build({Model::cluster, 8, 0.5, Boundary::open}).terms.size() == 14);
  CHECK(build({Model::cluster, 8, 0.0, Boundary::periodic}).terms.size() == 8);

  const PauliSumOperator zxxz9 = build({Model::zxxz, 9, 0.0, Boundary::open});
  REQUIRE(zxxz9.terms.size() == 6);
  CHECK(zxxz9.terms[0].second == P("ZXXZIIIII"));
  CHECK(zxxz9.terms[5].second == P("IIIIIZXXZ"));

  const PauliSumOperator syb6 = build({Model::symmetry_breaking, 6, 0.0, Boundary::open});
  REQUIRE(syb6.terms.size() == 4);
  CHECK(syb6.terms[0].second == P("ZIZIII"));

  CHECK_THROWS(build({Model::cluster, 3, 0.0, Boundary::open}));
  CHECK_THROWS(build({Model::zxxz, 5, 0.0, Boundary::open}));
  CHECK_THROWS(build({Model::cluster, 8, -0.5, Boundary::open}));
}

TEST_CASE("model and boundary names round trip") {
  for (Model m : {Model::cluster, Model::symmetry_breaking, Model::zxxz}) {
    CHECK(model_from_name(model_name(m)) == m);
  }
  for (Boundary b : {Boundary::open, Boundary::periodic}) {
    CHECK(boundary_from_name(boundary_name(b)) == b);
  }
  CHECK_THROWS(model_from_name("ising"));
  CHECK_THROWS(boundary_from_name("twisted"));
}

TEST_CASE("symmetry generators follow the sublattice rules") {
  const auto clu8 = symmetry_generators({Model::cluster, 8, 0.0, Boundary::open});
  REQUIRE(clu8.size() == 2);
  CHECK(clu8[0] == P("XIXIXIXI"));  // 1-based odd sites
  CHECK(clu8[1] == P("IXIXIXIX"));

  // Odd N: the odd-sublattice product picks up X_N as well.
  const auto clu9 = symmetry_generators({Model::cluster, 9, 0.0, Boundary::open});
  CHECK(clu9[0] == P("XIXIXIXIX"));
  CHECK(clu9[1] == P("IXIXIXIXI"));

  const auto zxxz9 = symmetry_generators({Model::zxxz, 9, 0.0, Boundary::open});
  REQUIRE(zxxz9.size() == 3);
  CHECK(zxxz9[0] == P("XIIXIIXII"));
  CHECK(zxxz9[1] == P("IXIIXIIXI"));
  CHECK(zxxz9[2] == P("IIXIIXIIX"));

  // All three residue classes commute with every generator, matching the
  // x-type centralizer kernel.
  const StabilizerGroup code = code_group(Model::zxxz, 9);
  for (const PauliString& xbar : zxxz9) {
    for (const PauliString& g : code.generators()) CHECK(commutes(xbar, g));
    CHECK(contains_up_to_phase(code, xbar) == false);
  }
}

TEST_CASE("every open-chain model commutes with its protecting symmetry") {
  for (Model m : {Model::cluster, Model::symmetry_breaking, Model::zxxz}) {
    for (int n : {8, 9, 10, 12}) {
      const ModelSpec spec{m, n, 0.8, Boundary::open};
      const PauliSumOperator h = build(spec);
      for (const PauliString& s : symmetry_generators(spec)) {
        for (const auto& [c, op] : h.terms) CHECK(commutes(s, op));
      }
    }
  }
  // Periodic even-length cluster rings keep the same sublattice symmetry.
  const ModelSpec ring{Model::cluster, 10, 0.8, Boundary::periodic};
  for (const PauliString& s : symmetry_generators(ring)) {
    for (const auto& [c, op] : build(ring).terms) CHECK(commutes(s, op));
  }
}

TEST_CASE("apply acts correctly on basis states") {
  // -Z1 X2 Z3 |000> = -|010>: Z factors give +1 on |0>, X flips qubit 1.
  const PauliSumOperator h(3, {{-1.0, P("ZXZ")}});
  const StateVector out = apply(h, StateVector::zero_state(3));
  for (uint64_t b = 0; b < 8; ++b) {
    CHECK(out.amp[b] == (b == 0b010 ? cplx{-1.0, 0.0} : cplx{0.0, 0.0}));
  }
}

TEST_CASE("the periodic cluster state is a -N eigenstate of the B=0 chain") {
  const int n = 8;
  const StateVector cl = cluster_state(n, Boundary::periodic);
  const PauliSumOperator h = build({Model::cluster, n, 0.0, Boundary::periodic});
  const StateVector hv = apply(h, cl);
  for (size_t i = 0; i < hv.amp.size(); ++i) {
    CHECK(std::abs(hv.amp[i] - cplx{-8.0, 0.0} * cl.amp[i]) < 1e-12);
  }
}

TEST_CASE("apply agrees with the dense oracle on random vectors") {
  std::mt19937_64 gen(61);
  for (Model m : {Model::cluster, Model::symmetry_breaking, Model::zxxz}) {
    const int n = 6;
    const PauliSumOperator h = build({m, n, 0.7, Boundary::open});
    oracles::MatrixXcd dense = oracles::MatrixXcd::Zero(64, 64);
    for (const auto& [coeff, op] : h.terms) dense += coeff * oracles::dense_pauli(op);
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector v = oracles::random_state(gen, n);
      const StateVector hv = apply(h, v);
      Eigen::VectorXcd expect = dense * Eigen::Map<const Eigen::VectorXcd>(v.amp.data(), 64);
      for (size_t i = 0; i < 64; ++i) REQUIRE(std::abs(hv.amp[i] - expect(i)) < 1e-12);
    }
  }
}

TEST_CASE("apply is linear") {
  std::mt19937_64 gen(67);
  const PauliSumOperator h = build({Model::zxxz, 8, 1.3, Boundary::open});
  const StateVector v = oracles::random_state(gen, 8);
  const StateVector w = oracles::random_state(gen, 8);
  const cplx alpha{0.3, -1.1};
  StateVector mix(8);
  for (size_t i = 0; i < mix.amp.size(); ++i) mix.amp[i] = alpha * v.amp[i] + w.amp[i];
  const StateVector lhs = apply(h, mix);
  const StateVector hv = apply(h, v), hw = apply(h, w);
  double err = 0.0;
  for (size_t i = 0; i < mix.amp.size(); ++i) {
    err += std::norm(lhs.amp[i] - alpha * hv.amp[i] - hw.amp[i]);
  }
  CHECK(std::sqrt(err) < 1e-12);
}

TEST_CASE("dense matrices are Hermitian for all models and fields") {
  for (Model m : {Model::cluster, Model::symmetry_breaking, Model::zxxz}) {
    for (double b : {0.0, 0.5, 1.5}) {
      const oracles::MatrixXcd H = dense_matrix(build({m, 6, b, Boundary::open}));
      CHECK((H - H.adjoint()).norm() < 1e-12);
    }
  }
}

TEST_CASE("operator construction rejects non-Hermitian terms") {
  CHECK_THROWS(PauliSumOperator(2, {{1.0, PauliString(2, 0b01, 0b01, 0)}}));  // XZ, phase +1
  CHECK_NOTHROW(PauliSumOperator(2, {{1.0, P("YY")}}));
  CHECK_THROWS(PauliSumOperator(2, {{1.0, P("iXI")}}));
}

TEST_CASE("code and state groups have the expected ranks") {
  CHECK(code_group(Model::cluster, 10).size() == 8);
  CHECK(code_group(Model::symmetry_breaking, 10).size() == 8);
  CHECK(code_group(Model::zxxz, 10).size() == 7);
  for (Model m : {Model::cluster, Model::symmetry_breaking, Model::zxxz}) {
    for (int n : {8, 9, 12}) {
      CHECK(symmetric_state_group(m, n).size() == n);  // full rank: a pure state
    }
  }
}
