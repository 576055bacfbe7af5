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

// Reference kernels. These are the definitional implementations the SIMD
// variants are equivalence-tested against, and the fallback on CPUs without
// the required extensions.

#include <bit>

#include "sptchain/kernels.hpp"

namespace sptchain::kernels {

namespace {

void pauli_term_scalar(cplx* out, const cplx* in, size_t dim, uint64_t x, uint64_t z, cplx w) {
  for (size_t b = 0; b < dim; ++b) {
    const cplx a = (std::popcount(b & z) & 1) ? -w : w;
    out[b ^ x] += a * in[b];
  }
}

void axpy_scalar(cplx* y, const cplx* x, size_t dim, cplx a) {
  for (size_t i = 0; i < dim; ++i) y[i] += a * x[i];
}

cplx dot_scalar(const cplx* x, const cplx* y, size_t dim) {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < dim; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq_scalar(const cplx* x, size_t dim) {
  double acc = 0.0;
  for (size_t i = 0; i < dim; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

void scale_scalar(cplx* x, size_t dim, cplx a) {
  for (size_t i = 0; i < dim; ++i) x[i] *= a;
}

}  // namespace

const KernelTable scalar_table = {
    "scalar", pauli_term_scalar, axpy_scalar, dot_scalar, norm_sq_scalar, scale_scalar,
};

}  // namespace sptchain::kernels
