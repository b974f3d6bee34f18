#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "penult/board.hpp"
#include "penult/games.hpp"

namespace penult {

// Precomputed tables for positions whose universe fits in one 64-bit word
// (grids up to 8x8, dots-and-boxes up to 5 dots).  The enumeration and
// solving engines run on these masks; boards are converted at the edges.
struct FastGame {
  RuleSet game{};
  int n = 0;
  int universe = 0;
  uint64_t full = 0;
  bool removal = false;  // DualTic: moves clear bits

  // Line/box targets.  Tic: rows then columns, won when one is contained.
  // DualTic: rows then columns, won when one is avoided.  DbAbbrev: boxes,
  // won when one is contained.
  std::vector<uint64_t> targets;
  std::array<std::array<int8_t, 2>, 64> targets_of{};  // -1 = none

  // Grid geometry (unused for db).
  std::array<uint64_t, 18> row_mask{};
  std::array<uint64_t, 18> col_mask{};
  std::array<uint64_t, 64> adjacent{};  // orthogonal neighbours (Tak)
  std::array<uint8_t, 64> edge_touch{};  // bit0 L, bit1 R, bit2 T, bit3 B
  std::vector<uint64_t> crosses;         // interior plus-windows (Tak)

  std::array<std::array<int8_t, 64>, 8> perm{};  // universe permutation per transform
  // byte_table[t][byte_pos][byte_value] -> transformed bits
  std::vector<std::array<std::array<uint64_t, 256>, 8>> byte_table;

  uint64_t transform64(uint64_t m, int t) const {
    const auto& bt = byte_table[t];
    uint64_t out = 0;
    for (int bp = 0; bp < 8; ++bp) out |= bt[bp][(m >> (bp * 8)) & 0xff];
    return out;
  }

  // Row-major lexicographic minimum: of two masks, the one that is empty at
  // the lowest differing universe index is smaller.
  static bool lex_less(uint64_t a, uint64_t b) {
    const uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((b >> std::countr_zero(diff)) & 1u) != 0;
  }

  uint64_t canonical64(uint64_t m) const {
    uint64_t best = m;
    for (int t = 1; t < 8; ++t) {
      const uint64_t img = transform64(m, t);
      if (lex_less(img, best)) best = img;
    }
    return best;
  }

  bool won(uint64_t occ) const;
  bool move_wins(uint64_t occ, int idx) const;  // placing/removing idx wins
  uint64_t winning_moves(uint64_t occ) const;   // all immediately winning moves
  bool is_penult(uint64_t occ) const;           // closed-form fast check
  uint64_t moves(uint64_t occ) const { return removal ? occ : (full & ~occ); }

  Board board(uint64_t m) const;
  uint64_t mask(const Board& b) const;
};

// Cached per (game, n); thread-safe.
const FastGame& fast_game(RuleSet game, int n);

}  // namespace penult
