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

#include <Eigen/Dense>
#include <vector>

#include "sptchain/hamiltonian.hpp"
#include "sptchain/state.hpp"

namespace sptchain {

struct LanczosOptions {
  double tol = 1e-10;     // absolute residual ||Hv - lambda v||
  int krylov_dim = 120;   // basis size per restart cycle
  int max_restarts = 80;
  uint64_t seed = 1;
  const StateVector* warm_start = nullptr;  // optional, not owned
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::vector<StateVector> eigenvectors;
  int degeneracy = 1;  // eigenvalues within 1e-8 * max(1, |E0|) of the minimum
  bool converged = false;
  int iterations = 0;
};

/// k lowest eigenpairs by Lanczos with full reorthogonalization, restarts,
/// and deflation against converged vectors. Deterministic for a fixed seed.
/// Non-convergence is reported through the result, never silently.
SpectrumResult lowest_eigenpairs(const PauliSumOperator& h, int k, double tol,
                                 LanczosOptions opts = {});

/// Full spectrum of the explicitly built 2^n x 2^n matrix. Guarded to
/// n <= 12.
SpectrumResult dense_spectrum(const PauliSumOperator& h);

/// Explicit Hermitian matrix of a Pauli-sum operator (n <= 12).
Eigen::MatrixXcd dense_matrix(const PauliSumOperator& h);

struct GroundStateResult {
  StateVector state;
  double energy = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Lowest eigenpair, optionally restricted to the joint +1 eigenspace of
/// `project_syms` by composing the matvec with the group-averaging
/// projector (the average over all products of the given generators).
GroundStateResult ground_state(const PauliSumOperator& h,
                               const std::vector<PauliString>& project_syms,
                               LanczosOptions opts = {});

/// The lowest state of h in the all-+1 sector of syms. Retries with fresh
/// seeds if the projector annihilates the start vector and verifies
/// ||sym v - v|| < 1e-8 for every generator on the returned state.
StateVector symmetric_ground_state(const PauliSumOperator& h,
                                   const std::vector<PauliString>& syms, double tol,
                                   LanczosOptions opts = {});

struct SectorResolvedResult {
  StateVector state;             // the symmetry-resolved state described below
  double ground_energy = 0.0;    // unrestricted minimum
  double symmetric_energy = 0.0; // minimum in the all-+1 sector
  bool converged = false;
  int iterations = 0;
  StateVector symmetric_state;   // all-+1 sector minimizer (warm-start handle)
  StateVector global_state;      // unrestricted minimizer (warm-start handle)
};

/// The symmetry-resolved ground state used for entropy scans. In the
/// degenerate regime, where the all-+1 sector ties the global minimum (the
/// sector representatives differ only by edge-local logicals there), the
/// all-+1 state is returned, which keeps the ideal-point values quantized.
/// When the unique global ground sits in a different sector of the
/// protecting symmetry, that state is returned instead, resolved within its
/// own sector; forcing the all-+1 sector past the transition would leave
/// residual excitations whose entropy never decays.
SectorResolvedResult sector_resolved_ground(const PauliSumOperator& h,
                                            const std::vector<PauliString>& syms,
                                            LanczosOptions sym_opts = {},
                                            LanczosOptions any_opts = {});

}  // namespace sptchain
