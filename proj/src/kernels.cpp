#include "penult/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace penult::kernels {

namespace {

SimdLevel detect_level() {
  if (const char* env = std::getenv("PENULT_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return SimdLevel::Scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!avx2_supported()) throw std::runtime_error("PENULT_SIMD=avx2 but CPU lacks AVX2");
      return SimdLevel::Avx2;
    }
    throw std::runtime_error("PENULT_SIMD must be 'scalar' or 'avx2'");
  }
  return avx2_supported() ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

SimdLevel g_level = detect_level();

struct GridMasks {
  uint64_t left, right, top, bottom, not_left, not_right;
};

GridMasks grid_masks(int n) {
  GridMasks m{};
  for (int r = 0; r < n; ++r) {
    m.left |= uint64_t{1} << (r * n);
    m.right |= uint64_t{1} << (r * n + n - 1);
  }
  for (int c = 0; c < n; ++c) {
    m.top |= uint64_t{1} << c;
    m.bottom |= uint64_t{1} << ((n - 1) * n + c);
  }
  m.not_left = ~m.left;
  m.not_right = ~m.right;
  return m;
}

bool flood_connects(uint64_t occ, int n, const GridMasks& m, uint64_t from, uint64_t to) {
  uint64_t x = occ & from;
  if (!x) return false;
  for (;;) {
    const uint64_t grown =
        occ & (x | ((x << 1) & m.not_left) | ((x >> 1) & m.not_right) | (x << n) | (x >> n));
    if (grown == x) break;
    x = grown;
    if (x & to) return true;
  }
  return (x & to) != 0;
}

}  // namespace

bool tak_spans64(uint64_t occ, int n) {
  const GridMasks m = grid_masks(n);
  return flood_connects(occ, n, m, m.left, m.right) ||
         flood_connects(occ, n, m, m.top, m.bottom);
}

SimdLevel active_level() { return g_level; }
void set_level(SimdLevel level) { g_level = level; }

const char* level_name(SimdLevel level) {
  return level == SimdLevel::Avx2 ? "avx2" : "scalar";
}

namespace scalar {

void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out) {
  std::memset(out, 0, ((count + 63) / 64) * sizeof(uint64_t));
  for (uint32_t k = 0; k < count; ++k) {
    const uint32_t mask = begin + k;
    for (uint32_t t : targets) {
      if ((mask & t) == t) {
        out[k >> 6] |= uint64_t{1} << (k & 63);
        break;
      }
    }
  }
}

void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out) {
  std::memset(out, 0, ((count + 63) / 64) * sizeof(uint64_t));
  for (uint32_t k = 0; k < count; ++k) {
    const uint32_t mask = begin + k;
    for (uint32_t t : targets) {
      if ((mask & t) == 0) {
        out[k >> 6] |= uint64_t{1} << (k & 63);
        break;
      }
    }
  }
}

void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out) {
  std::memset(out, 0, ((count + 63) / 64) * sizeof(uint64_t));
  for (uint32_t k = 0; k < count; ++k)
    if (tak_spans64(begin + k, n)) out[k >> 6] |= uint64_t{1} << (k & 63);
}

}  // namespace scalar

void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out) {
  if (g_level == SimdLevel::Avx2)
    avx2::sweep_any_contained(targets, begin, count, out);
  else
    scalar::sweep_any_contained(targets, begin, count, out);
}

void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out) {
  if (g_level == SimdLevel::Avx2)
    avx2::sweep_any_avoided(targets, begin, count, out);
  else
    scalar::sweep_any_avoided(targets, begin, count, out);
}

void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out) {
  if (g_level == SimdLevel::Avx2)
    avx2::sweep_tak_spans(n, begin, count, out);
  else
    scalar::sweep_tak_spans(n, begin, count, out);
}

}  // namespace penult::kernels
