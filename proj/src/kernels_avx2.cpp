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

// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after the runtime CPU check in
// kernels.cpp.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "sptchain/kernels.hpp"

namespace sptchain::kernels {

namespace {

constexpr int kSignBlockBits = 8;  // 256-entry sign table, 4 KiB, L1-resident

int parity(uint64_t v) { return std::popcount(v) & 1; }

// tbl holds the sign of (-1)^popcount(i & z) for i < count, duplicated per
// complex so a 256-bit load yields [s0, s0, s1, s1].
void build_sign_table(double* tbl, size_t count, uint64_t z) {
  for (size_t i = 0; i < count; ++i) {
    const double s = parity(i & z) ? -1.0 : 1.0;
    tbl[2 * i] = s;
    tbl[2 * i + 1] = s;
  }
}

// out[i] += tbl[i] * (w * in[i]) over a contiguous run of `count` complexes,
// count a multiple of 2 and of the table length.
inline void fma_signed_run(cplx* out, const cplx* in, const double* tbl, size_t tbl_len,
                           size_t count, cplx w) {
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  auto* od = reinterpret_cast<double*>(out);
  const auto* id = reinterpret_cast<const double*>(in);
  for (size_t i = 0; i < count; i += 2) {
    const __m256d v = _mm256_loadu_pd(id + 2 * i);
    const __m256d vswap = _mm256_permute_pd(v, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(wr, v, _mm256_mul_pd(wi, vswap));
    const __m256d sv = _mm256_loadu_pd(tbl + 2 * (i & (tbl_len - 1)));
    const __m256d acc = _mm256_fmadd_pd(sv, prod, _mm256_loadu_pd(od + 2 * i));
    _mm256_storeu_pd(od + 2 * i, acc);
  }
}

void pauli_term_avx2(cplx* out, const cplx* in, size_t dim, uint64_t x, uint64_t z, cplx w) {
  if (dim < 4 || (x != 0 && (x & 1))) {
    // Runs too short to vectorize: an X on qubit 0 pairs adjacent
    // amplitudes, so fall back to the reference loop.
    scalar_table.pauli_term(out, in, dim, x, z, w);
    return;
  }
  alignas(32) double tbl[2u << kSignBlockBits];
  if (x == 0) {
    const int kb = std::min(std::countr_zero(dim), kSignBlockBits);
    const size_t tbl_n = size_t{1} << kb;
    build_sign_table(tbl, tbl_n, z);
    for (size_t tile = 0; tile < dim; tile += tbl_n) {
      const double s = parity(tile & z) ? -1.0 : 1.0;
      fma_signed_run(out + tile, in + tile, tbl, tbl_n, tbl_n, w * s);
    }
    return;
  }
  // With t the lowest set bit of x, indices split into contiguous runs of
  // 2^t whose XOR partners are again contiguous, so both directions of the
  // permutation stream linearly.
  const int t = std::countr_zero(x);
  const size_t run = size_t{1} << t;
  const uint64_t x_hi = x >> (t + 1);
  const double s_xz = parity(x & z) ? -1.0 : 1.0;
  const int kb = std::min(t, kSignBlockBits);
  const size_t tbl_n = size_t{1} << kb;
  build_sign_table(tbl, tbl_n, z);
  const size_t groups = dim >> (t + 1);
  for (size_t hh = 0; hh < groups; ++hh) {
    const size_t base0 = hh << (t + 1);
    const size_t base1 = (((hh ^ x_hi) << (t + 1)) | run);
    for (size_t tile = 0; tile < run; tile += tbl_n) {
      const double s0 = parity((base0 | tile) & z) ? -1.0 : 1.0;
      const cplx wa = w * s0;
      fma_signed_run(out + base1 + tile, in + base0 + tile, tbl, tbl_n, tbl_n, wa);
      fma_signed_run(out + base0 + tile, in + base1 + tile, tbl, tbl_n, tbl_n, wa * s_xz);
    }
  }
}

void axpy_avx2(cplx* y, const cplx* x, size_t dim, cplx a) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* yd = reinterpret_cast<double*>(y);
  const auto* xd = reinterpret_cast<const double*>(x);
  size_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vswap = _mm256_permute_pd(v, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vswap));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < dim; ++i) y[i] += a * x[i];
}

cplx dot_avx2(const cplx* x, const cplx* y, size_t dim) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  size_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_im);
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  // acc_re lanes hold xr*yr and xi*yi; acc_im lanes hold xi*yr (even) and
  // xr*yi (odd), entering the imaginary part with opposite signs.
  double re = re4[0] + re4[1] + re4[2] + re4[3];
  double im = (im4[1] - im4[0]) + (im4[3] - im4[2]);
  for (; i < dim; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* x, size_t dim) {
  __m256d acc = _mm256_setzero_pd();
  const auto* xd = reinterpret_cast<const double*>(x);
  size_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double a4[4];
  _mm256_store_pd(a4, acc);
  double out = a4[0] + a4[1] + a4[2] + a4[3];
  for (; i < dim; ++i) out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return out;
}

void scale_avx2(cplx* x, size_t dim, cplx a) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* xd = reinterpret_cast<double*>(x);
  size_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vswap = _mm256_permute_pd(v, 0x5);
    _mm256_storeu_pd(xd + 2 * i, _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vswap)));
  }
  for (; i < dim; ++i) x[i] *= a;
}

}  // namespace

const KernelTable avx2_table = {
    "avx2", pauli_term_avx2, axpy_avx2, dot_avx2, norm_sq_avx2, scale_avx2,
};

}  // namespace sptchain::kernels

#endif  // x86_64
