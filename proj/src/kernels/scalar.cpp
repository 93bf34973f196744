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

#include <bit>

#include "bsfc/kernels.hpp"

namespace bsfc::kernels {
namespace {

OverlapSums pair_overlap_scalar(const std::uint64_t* x, const std::uint64_t* z, std::size_t rows,
                                std::size_t words) {
  OverlapSums s;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::uint64_t* xi = x + i * words;
    const std::uint64_t* zi = z + i * words;
    for (std::size_t j = i + 1; j < rows; ++j) {
      const std::uint64_t* xj = x + j * words;
      const std::uint64_t* zj = z + j * words;
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t xo = xi[w] | xj[w];
        const std::uint64_t zo = zi[w] | zj[w];
        s.any += static_cast<std::uint64_t>(std::popcount(xo | zo));
        s.x += static_cast<std::uint64_t>(std::popcount(xo));
        s.z += static_cast<std::uint64_t>(std::popcount(zo));
      }
    }
  }
  return s;
}

void mix_rows_scalar(cplx* r0, cplx* r1, std::size_t len, const cplx* m) {
  for (std::size_t k = 0; k < len; ++k) {
    const cplx a = r0[k];
    const cplx b = r1[k];
    r0[k] = m[0] * a + m[1] * b;
    r1[k] = m[2] * a + m[3] * b;
  }
}

void scale_row_scalar(cplx* r, std::size_t len, cplx s) {
  for (std::size_t k = 0; k < len; ++k) r[k] *= s;
}

cplx conj_dot_scalar(const cplx* a, const cplx* b, std::size_t len) {
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < len; ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", pair_overlap_scalar, mix_rows_scalar, scale_row_scalar,
                                 conj_dot_scalar};
  return table;
}

}  // namespace bsfc::kernels
