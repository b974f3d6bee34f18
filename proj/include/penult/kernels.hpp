#pragma once

#include <cstdint>
#include <span>

namespace penult::kernels {

// Dense-sweep kernels: evaluate a win predicate over a contiguous range of
// occupancy masks and pack the results into a bitmap (bit k of `out`
// corresponds to mask `begin + k`).  A scalar reference implementation always
// exists; an AVX2 variant is selected at runtime when the CPU supports it.
// PENULT_SIMD=scalar|avx2 overrides the choice.

enum class SimdLevel { Scalar, Avx2 };

SimdLevel active_level();
void set_level(SimdLevel level);
const char* level_name(SimdLevel level);
bool avx2_supported();

// bit k = 1 iff some target is fully contained in mask begin+k.
void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out);
// bit k = 1 iff some target has empty intersection with mask begin+k.
void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out);
// bit k = 1 iff mask begin+k, read as an n*n cell grid, has an orthogonally
// connected occupied path joining left-right or top-bottom (n <= 5).
void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out);

namespace scalar {
void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out);
void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out);
void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out);
}  // namespace scalar

namespace avx2 {
void sweep_any_contained(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                         uint64_t* out);
void sweep_any_avoided(std::span<const uint32_t> targets, uint32_t begin, uint32_t count,
                       uint64_t* out);
void sweep_tak_spans(int n, uint32_t begin, uint32_t count, uint64_t* out);
}  // namespace avx2

// Single-mask flood-fill span test for an n*n grid in one word (n <= 8).
bool tak_spans64(uint64_t occ, int n);

}  // namespace penult::kernels
