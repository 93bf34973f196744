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

#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference
// implementation and, on x86-64 builds, an AVX2 variant. The variant is picked
// once at startup from CPUID; BSFC_KERNELS=scalar in the environment forces
// the reference path.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace bsfc::kernels {

using cplx = std::complex<double>;

/// Sums over unordered row pairs i<j of popcount(x_i|z_i|x_j|z_j),
/// popcount(x_i|x_j) and popcount(z_i|z_j).
struct OverlapSums {
  std::uint64_t any = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const OverlapSums&, const OverlapSums&) = default;
};

struct KernelTable {
  std::string_view name;

  /// x and z are row-major with `words` 64-bit words per row.
  OverlapSums (*pair_overlap)(const std::uint64_t* x, const std::uint64_t* z, std::size_t rows,
                              std::size_t words);

  /// (r0, r1) <- [[m0, m1], [m2, m3]] * (r0, r1), elementwise over `len` entries.
  void (*mix_rows)(cplx* r0, cplx* r1, std::size_t len, const cplx* m);

  /// r <- s * r.
  void (*scale_row)(cplx* r, std::size_t len, cplx s);

  /// sum_k conj(a_k) * b_k.
  cplx (*conj_dot)(const cplx* a, const cplx* b, std::size_t len);
};

const KernelTable& scalar();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2();
/// The table used by the library.
const KernelTable& active();

/// Overrides the active table ("scalar" or "avx2"). Returns false if the
/// requested variant is unavailable. Intended for tests and benchmarking.
bool select(std::string_view name);

}  // namespace bsfc::kernels
