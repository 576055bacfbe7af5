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

#include <complex>
#include <cstddef>
#include <cstdint>

namespace sptchain::kernels {

using cplx = std::complex<double>;

/// The arithmetic inner loops behind the matrix-free solvers. Every entry
/// has a scalar reference implementation and may have SIMD variants; the
/// active table is picked once at startup from CPU capabilities and can be
/// overridden for testing.
struct KernelTable {
  const char* name;

  /// out[b ^ x] += w * (-1)^popcount(b & z) * in[b] for every b < dim.
  /// dim must be a power of two and out must not alias in.
  void (*pauli_term)(cplx* out, const cplx* in, size_t dim, uint64_t x, uint64_t z, cplx w);

  /// y += a * x
  void (*axpy)(cplx* y, const cplx* x, size_t dim, cplx a);

  /// sum_i conj(x[i]) * y[i]
  cplx (*dot)(const cplx* x, const cplx* y, size_t dim);

  /// sum_i |x[i]|^2
  double (*norm_sq)(const cplx* x, size_t dim);

  /// x *= a
  void (*scale)(cplx* x, size_t dim, cplx a);
};

enum class Backend { auto_detect, scalar, avx2 };

const KernelTable& active();
Backend active_backend();

/// Overrides kernel selection (mainly for equivalence tests and timing
/// comparisons). Throws if the requested backend is not available on this
/// CPU or was not compiled in.
void force_backend(Backend b);

bool backend_available(Backend b);

extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif

}  // namespace sptchain::kernels
