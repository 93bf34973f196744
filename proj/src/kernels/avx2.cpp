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

// Compiled with -mavx2 -mfma; only reached through the dispatcher after a
// CPUID check.

#include <immintrin.h>

#include <bit>

#include "bsfc/kernels.hpp"

namespace bsfc::kernels {
namespace {

// Per-64-bit-lane popcount: nibble lookup, then horizontal byte sums.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

OverlapSums pair_overlap_avx2(const std::uint64_t* x, const std::uint64_t* z, std::size_t rows,
                              std::size_t words) {
  __m256i acc_any = _mm256_setzero_si256();
  __m256i acc_x = _mm256_setzero_si256();
  __m256i acc_z = _mm256_setzero_si256();
  OverlapSums tail;

  auto scalar_word = [&tail](std::uint64_t xi, std::uint64_t zi, std::uint64_t xj, std::uint64_t zj) {
    const std::uint64_t xo = xi | xj;
    const std::uint64_t zo = zi | zj;
    tail.any += static_cast<std::uint64_t>(std::popcount(xo | zo));
    tail.x += static_cast<std::uint64_t>(std::popcount(xo));
    tail.z += static_cast<std::uint64_t>(std::popcount(zo));
  };

  if (words == 1) {
    // One word per row: vectorize across the partner rows j.
    for (std::size_t i = 0; i < rows; ++i) {
      const __m256i xi = _mm256_set1_epi64x(static_cast<long long>(x[i]));
      const __m256i zi = _mm256_set1_epi64x(static_cast<long long>(z[i]));
      std::size_t j = i + 1;
      for (; j + 4 <= rows; j += 4) {
        const __m256i xj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
        const __m256i zj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(z + j));
        const __m256i xo = _mm256_or_si256(xi, xj);
        const __m256i zo = _mm256_or_si256(zi, zj);
        acc_any = _mm256_add_epi64(acc_any, popcount_epi64(_mm256_or_si256(xo, zo)));
        acc_x = _mm256_add_epi64(acc_x, popcount_epi64(xo));
        acc_z = _mm256_add_epi64(acc_z, popcount_epi64(zo));
      }
      for (; j < rows; ++j) scalar_word(x[i], z[i], x[j], z[j]);
    }
  } else {
    // Wide rows: vectorize across words of one pair.
    for (std::size_t i = 0; i < rows; ++i) {
      const std::uint64_t* xi = x + i * words;
      const std::uint64_t* zi = z + i * words;
      for (std::size_t j = i + 1; j < rows; ++j) {
        const std::uint64_t* xj = x + j * words;
        const std::uint64_t* zj = z + j * words;
        std::size_t w = 0;
        for (; w + 4 <= words; w += 4) {
          const __m256i xo = _mm256_or_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(xi + w)),
                                             _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xj + w)));
          const __m256i zo = _mm256_or_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(zi + w)),
                                             _mm256_loadu_si256(reinterpret_cast<const __m256i*>(zj + w)));
          acc_any = _mm256_add_epi64(acc_any, popcount_epi64(_mm256_or_si256(xo, zo)));
          acc_x = _mm256_add_epi64(acc_x, popcount_epi64(xo));
          acc_z = _mm256_add_epi64(acc_z, popcount_epi64(zo));
        }
        for (; w < words; ++w) scalar_word(xi[w], zi[w], xj[w], zj[w]);
      }
    }
  }
  return OverlapSums{tail.any + hsum_epi64(acc_any), tail.x + hsum_epi64(acc_x),
                     tail.z + hsum_epi64(acc_z)};
}

// Product of a broadcast complex constant (re, im) with two packed complexes.
inline __m256d cmul(__m256d re, __m256d im, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(re, v, _mm256_mul_pd(im, swapped));
}

void mix_rows_avx2(cplx* r0, cplx* r1, std::size_t len, const cplx* m) {
  double* a = reinterpret_cast<double*>(r0);
  double* b = reinterpret_cast<double*>(r1);
  const __m256d m0r = _mm256_set1_pd(m[0].real()), m0i = _mm256_set1_pd(m[0].imag());
  const __m256d m1r = _mm256_set1_pd(m[1].real()), m1i = _mm256_set1_pd(m[1].imag());
  const __m256d m2r = _mm256_set1_pd(m[2].real()), m2i = _mm256_set1_pd(m[2].imag());
  const __m256d m3r = _mm256_set1_pd(m[3].real()), m3i = _mm256_set1_pd(m[3].imag());
  std::size_t k = 0;
  for (; k + 2 <= len; k += 2) {
    const __m256d va = _mm256_loadu_pd(a + 2 * k);
    const __m256d vb = _mm256_loadu_pd(b + 2 * k);
    _mm256_storeu_pd(a + 2 * k, _mm256_add_pd(cmul(m0r, m0i, va), cmul(m1r, m1i, vb)));
    _mm256_storeu_pd(b + 2 * k, _mm256_add_pd(cmul(m2r, m2i, va), cmul(m3r, m3i, vb)));
  }
  for (; k < len; ++k) {
    const cplx va = r0[k];
    const cplx vb = r1[k];
    r0[k] = m[0] * va + m[1] * vb;
    r1[k] = m[2] * va + m[3] * vb;
  }
}

void scale_row_avx2(cplx* r, std::size_t len, cplx s) {
  double* p = reinterpret_cast<double*>(r);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  std::size_t k = 0;
  for (; k + 2 <= len; k += 2) {
    _mm256_storeu_pd(p + 2 * k, cmul(sr, si, _mm256_loadu_pd(p + 2 * k)));
  }
  for (; k < len; ++k) r[k] *= s;
}

cplx conj_dot_avx2(const cplx* a, const cplx* b, std::size_t len) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();  // (ar*br, ai*bi) lanes
  __m256d acc_im = _mm256_setzero_pd();  // (ar*bi, ai*br) lanes
  std::size_t k = 0;
  for (; k + 2 <= len; k += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
  }
  alignas(32) double re[4];
  alignas(32) double im[4];
  _mm256_store_pd(re, acc_re);
  _mm256_store_pd(im, acc_im);
  cplx acc{re[0] + re[1] + re[2] + re[3], (im[0] - im[1]) + (im[2] - im[3])};
  for (; k < len; ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", pair_overlap_avx2, mix_rows_avx2, scale_row_avx2,
                                 conj_dot_avx2};
  return table;
}

}  // namespace bsfc::kernels
