// AVX2 variants of the sweep kernels: eight u32 masks per vector.  This file
// is the only translation unit built with -mavx2; everything here is reached
// through the runtime dispatch in kernels.cpp.

#include "penult/kernels.hpp"

#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace penult::kernels {

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

namespace avx2 {

namespace {

const __m256i kLaneOffsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

// Packs one predicate byte per call: lane i of `hits` must be 0 or ~0.
inline uint8_t movemask8(__m256i hits) {
  return static_cast<uint8_t>(_mm256_movemask_ps(_mm256_castsi256_ps(hits)));
}

template <typename Fn>
void sweep8(uint32_t begin, uint32_t count, uint64_t* out, Fn&& predicate8) {
  const uint32_t words = (count + 63) / 64;
  std::memset(out, 0, words * sizeof(uint64_t));
  uint32_t k = 0;
  for (; k + 8 <= count; k += 8) {
    const __m256i masks = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(begin + k)),
                                           kLaneOffsets);
    const uint8_t byte = predicate8(masks);
    out[k >> 6] |= uint64_t{byte} << (k & 63);
  }
  // tail lanes one at a time through the same vector path
  if (k < count) {
    const __m256i masks = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(begin + k)),
                                           kLaneOffsets);
    const uint8_t byte = predicate8(masks);
    for (uint32_t i = 0; k + i < count && i < 8; ++i)
      if ((byte >> i) & 1u) out[(k + i) >> 6] |= uint64_t{1} << ((k + i) & 63);
  }
}

}  // namespace

void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out) {
  sweep8(begin, count, out, [&](__m256i masks) {
    __m256i acc = _mm256_setzero_si256();
    for (uint32_t t : targets) {
      const __m256i vt = _mm256_set1_epi32(static_cast<int>(t));
      acc = _mm256_or_si256(acc, _mm256_cmpeq_epi32(_mm256_and_si256(masks, vt), vt));
    }
    return movemask8(acc);
  });
}

void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out) {
  sweep8(begin, count, out, [&](__m256i masks) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    for (uint32_t t : targets) {
      const __m256i vt = _mm256_set1_epi32(static_cast<int>(t));
      acc = _mm256_or_si256(acc, _mm256_cmpeq_epi32(_mm256_and_si256(masks, vt), zero));
    }
    return movemask8(acc);
  });
}

void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out) {
  uint32_t left = 0, right = 0, top = 0, bottom = 0;
  for (int r = 0; r < n; ++r) {
    left |= uint32_t{1} << (r * n);
    right |= uint32_t{1} << (r * n + n - 1);
  }
  for (int c = 0; c < n; ++c) {
    top |= uint32_t{1} << c;
    bottom |= uint32_t{1} << ((n - 1) * n + c);
  }
  const __m256i vleft = _mm256_set1_epi32(static_cast<int>(left));
  const __m256i vright = _mm256_set1_epi32(static_cast<int>(right));
  const __m256i vtop = _mm256_set1_epi32(static_cast<int>(top));
  const __m256i vbottom = _mm256_set1_epi32(static_cast<int>(bottom));
  const __m256i vnotleft = _mm256_set1_epi32(static_cast<int>(~left));
  const __m256i vnotright = _mm256_set1_epi32(static_cast<int>(~right));
  const __m128i shift_n = _mm_cvtsi32_si128(n);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi32(-1);

  auto flood_hits = [&](__m256i occ, __m256i from, __m256i to) {
    __m256i x = _mm256_and_si256(occ, from);
    for (;;) {
      __m256i grown = _mm256_or_si256(x, _mm256_and_si256(_mm256_slli_epi32(x, 1), vnotleft));
      grown = _mm256_or_si256(grown, _mm256_and_si256(_mm256_srli_epi32(x, 1), vnotright));
      grown = _mm256_or_si256(grown, _mm256_sll_epi32(x, shift_n));
      grown = _mm256_or_si256(grown, _mm256_srl_epi32(x, shift_n));
      grown = _mm256_and_si256(grown, occ);
      const __m256i diff = _mm256_xor_si256(grown, x);
      x = grown;
      if (_mm256_testz_si256(diff, diff)) break;
    }
    // lanes where (x & to) != 0
    return _mm256_xor_si256(_mm256_cmpeq_epi32(_mm256_and_si256(x, to), zero), ones);
  };

  sweep8(begin, count, out, [&](__m256i masks) {
    const __m256i hit = _mm256_or_si256(flood_hits(masks, vleft, vright),
                                        flood_hits(masks, vtop, vbottom));
    return movemask8(hit);
  });
}

}  // namespace avx2
}  // namespace penult::kernels

#else  // non-x86 fallbacks: dispatch never selects these

namespace penult::kernels {
bool avx2_supported() { return false; }
namespace avx2 {
void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out) {
  scalar::sweep_any_contained(targets, begin, count, out);
}
void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out) {
  scalar::sweep_any_avoided(targets, begin, count, out);
}
void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out) {
  scalar::sweep_tak_spans(n, begin, count, out);
}
}  // namespace avx2
}  // namespace penult::kernels

#endif
