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

#include "sptchain/entropy.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sptchain {

namespace {

constexpr int kMaxReducedQubits = 14;
constexpr double kEigenvalueClip = 1e-12;
constexpr double kNegativeEigenvalueTol = -1e-9;

uint64_t full_mask(int n) { return (1ull << n) - 1; }

uint64_t contiguous_block(int first, int count) {
  return ((1ull << count) - 1) << first;
}

}  // namespace

CutKind cut_from_name(const std::string& name) {
  if (name == "t") return CutKind::tripartite;
  if (name == "q") return CutKind::quadripartite;
  throw std::invalid_argument("unknown cut '" + name + "' (expected t or q)");
}

std::string cut_name(CutKind kind) { return kind == CutKind::tripartite ? "t" : "q"; }

void CutLayout::validate() const {
  if (n < 1 || n > 63) throw std::invalid_argument("layout qubit count out of range");
  const uint64_t all = full_mask(n);
  if (kind == CutKind::tripartite && d_mask != 0) {
    throw std::invalid_argument("tripartite layout must not have a D region");
  }
  uint64_t seen = 0;
  for (uint64_t m : {a_mask, b_mask, c_mask, d_mask}) {
    if (m & ~all) throw std::invalid_argument("layout region has qubits >= n");
    if (m & seen) throw std::invalid_argument("layout regions overlap");
    seen |= m;
  }
  if (seen != all) throw std::invalid_argument("layout regions must cover the chain");
  const bool need_d = kind == CutKind::quadripartite;
  if (a_mask == 0 || b_mask == 0 || c_mask == 0 || (need_d && d_mask == 0)) {
    throw std::invalid_argument("layout regions must be nonempty");
  }
}

CutLayout make_layout(int n, CutKind kind) {
  const int blocks = kind == CutKind::tripartite ? 3 : 4;
  if (n < 2 * blocks) {
    throw std::invalid_argument("chain too short for this cut: n >= " +
                                std::to_string(2 * blocks) + " required");
  }
  std::vector<int> sizes(blocks, n / blocks);
  for (int i = 0; i < n % blocks; ++i) sizes[i] += 1;
  CutLayout layout;
  layout.n = n;
  layout.kind = kind;
  int at = 0;
  std::vector<uint64_t*> order =
      kind == CutKind::tripartite
          ? std::vector<uint64_t*>{&layout.a_mask, &layout.b_mask, &layout.c_mask}
          : std::vector<uint64_t*>{&layout.a_mask, &layout.b_mask, &layout.d_mask,
                                   &layout.c_mask};
  for (int i = 0; i < blocks; ++i) {
    *order[i] = contiguous_block(at, sizes[i]);
    at += sizes[i];
  }
  layout.validate();
  return layout;
}

CutLayout layout_from_ends(int n, CutKind kind, const std::vector<int>& ends) {
  const size_t expected = kind == CutKind::tripartite ? 2 : 3;
  if (ends.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " block ends for this cut");
  }
  std::vector<int> bounds = ends;
  bounds.push_back(n);
  int prev = 0;
  std::vector<uint64_t> masks;
  for (int end : bounds) {
    if (end <= prev || end > n) throw std::invalid_argument("block ends must be increasing and <= n");
    masks.push_back(contiguous_block(prev, end - prev));
    prev = end;
  }
  CutLayout layout;
  layout.n = n;
  layout.kind = kind;
  layout.a_mask = masks[0];
  layout.b_mask = masks[1];
  if (kind == CutKind::tripartite) {
    layout.c_mask = masks[2];
  } else {
    layout.d_mask = masks[2];
    layout.c_mask = masks[3];
  }
  layout.validate();
  return layout;
}

Eigen::MatrixXcd reduced_density(const StateVector& v, uint64_t subset_mask,
                                 bool* renormalized) {
  if (v.n < 1 || v.amp.size() != (size_t{1} << v.n)) {
    throw std::invalid_argument("malformed state vector");
  }
  if (subset_mask & ~full_mask(v.n)) throw std::invalid_argument("subset has qubits >= n");
  const int k = std::popcount(subset_mask);
  if (k > kMaxReducedQubits) {
    throw std::invalid_argument("subset too large for a dense reduced density matrix");
  }
  // Position of each qubit inside the packed subset/environment indices.
  std::vector<int> shift_subset, shift_env;
  {
    int s = 0, e = 0;
    for (int j = 0; j < v.n; ++j) {
      if ((subset_mask >> j) & 1) {
        shift_subset.push_back(s++);
        shift_env.push_back(-1);
      } else {
        shift_subset.push_back(-1);
        shift_env.push_back(e++);
      }
    }
  }
  const size_t rows = size_t{1} << k;
  const size_t cols = v.amp.size() >> k;
  Eigen::MatrixXcd m(rows, cols);
  for (uint64_t b = 0; b < v.amp.size(); ++b) {
    uint64_t r = 0, c = 0;
    uint64_t rest = b;
    while (rest) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      if (shift_subset[j] >= 0) r |= 1ull << shift_subset[j];
      else c |= 1ull << shift_env[j];
    }
    m(r, c) = v.amp[b];
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  const double trace = rho.trace().real();
  const bool off = std::abs(trace - 1.0) > 1e-9;
  if (off) {
    if (trace <= 0.0) throw std::invalid_argument("cannot reduce the zero state");
    rho /= trace;
  }
  if (renormalized != nullptr) *renormalized = off;
  return rho;
}

double von_neumann_bits(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("entropy eigensolver failed");
  double bits = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda < kNegativeEigenvalueTol) {
      throw std::runtime_error("density matrix has a negative eigenvalue: " +
                               std::to_string(lambda));
    }
    if (lambda < kEigenvalueClip) continue;
    bits -= lambda * std::log2(lambda);
  }
  return bits;
}

double region_entropy(const StateVector& v, uint64_t subset_mask) {
  const uint64_t complement = full_mask(v.n) & ~subset_mask;
  // For a pure global state both marginals share their spectrum; evaluate
  // the smaller one.
  const uint64_t pick =
      std::popcount(subset_mask) <= std::popcount(complement) ? subset_mask : complement;
  if (pick == 0) return 0.0;
  return von_neumann_bits(reduced_density(v, pick));
}

TopoEntropyRecord topo_entropy(const StateVector& v, const CutLayout& layout) {
  layout.validate();
  if (layout.n != v.n) throw std::invalid_argument("layout does not match state size");
  TopoEntropyRecord rec;
  rec.layout = layout;
  rec.s_ab = region_entropy(v, layout.a_mask | layout.b_mask);
  rec.s_bc = region_entropy(v, layout.b_mask | layout.c_mask);
  rec.s_b = region_entropy(v, layout.b_mask);
  rec.s_abc = region_entropy(v, layout.a_mask | layout.b_mask | layout.c_mask);
  rec.s_topo = rec.s_ab + rec.s_bc - rec.s_b - rec.s_abc;
  return rec;
}

}  // namespace sptchain
