// Copyright 2026 The bsfc Authors
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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "bsfc/kernels.hpp"

namespace bsfc::kernels {

#if defined(BSFC_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(BSFC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") &&
         __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const char* env = std::getenv("BSFC_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
  if (const KernelTable* t = avx2()) return t;
  return &scalar();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable* avx2() {
#if defined(BSFC_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(std::string_view name) {
  if (name == "scalar") {
    current().store(&scalar(), std::memory_order_release);
    return true;
  }
  if (name == "avx2") {
    if (const KernelTable* t = avx2()) {
      current().store(t, std::memory_order_release);
      return true;
    }
  }
  return false;
}

}  // namespace bsfc::kernels
