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

#include "sptchain/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace sptchain::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return &avx2_table;
#endif
  return &scalar_table;
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = detect();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

Backend active_backend() {
  return &active() == &scalar_table ? Backend::scalar : Backend::avx2;
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::auto_detect:
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

void force_backend(Backend b) {
  switch (b) {
    case Backend::auto_detect:
      g_active.store(detect(), std::memory_order_release);
      return;
    case Backend::scalar:
      g_active.store(&scalar_table, std::memory_order_release);
      return;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (cpu_has_avx2()) {
        g_active.store(&avx2_table, std::memory_order_release);
        return;
      }
#endif
      throw std::runtime_error("AVX2 kernels are not available on this CPU");
  }
}

}  // namespace sptchain::kernels
