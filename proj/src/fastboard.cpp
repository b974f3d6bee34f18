#include "penult/fastboard.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "penult/kernels.hpp"
#include "penult/transform.hpp"

namespace penult {

namespace {

void add_target(FastGame& fg, uint64_t mask) {
  const int8_t id = static_cast<int8_t>(fg.targets.size());
  fg.targets.push_back(mask);
  uint64_t bits = mask;
  while (bits) {
    const int idx = std::countr_zero(bits);
    bits &= bits - 1;
    auto& slots = fg.targets_of[idx];
    if (slots[0] < 0)
      slots[0] = id;
    else
      slots[1] = id;
  }
}

FastGame build(RuleSet game, int n) {
  FastGame fg;
  fg.game = game;
  fg.n = n;
  fg.universe = universe_size(game, n);
  if (fg.universe > 64) throw std::invalid_argument("fast engine limited to 64-bit universes");
  fg.full = fg.universe == 64 ? ~uint64_t{0} : (uint64_t{1} << fg.universe) - 1;
  fg.removal = game == RuleSet::DualTic;
  for (auto& slots : fg.targets_of) slots = {-1, -1};

  if (game == RuleSet::DbAbbrev) {
    for (int r = 0; r + 1 < n; ++r)
      for (int c = 0; c + 1 < n; ++c) {
        const uint64_t box = (uint64_t{1} << h_edge_index(n, r, c)) |
                             (uint64_t{1} << h_edge_index(n, r + 1, c)) |
                             (uint64_t{1} << v_edge_index(n, r, c)) |
                             (uint64_t{1} << v_edge_index(n, r, c + 1));
        add_target(fg, box);
      }
  } else {
    for (int r = 0; r < n; ++r) {
      uint64_t m = 0;
      for (int c = 0; c < n; ++c) m |= uint64_t{1} << cell_index(n, r, c);
      fg.row_mask[r] = m;
    }
    for (int c = 0; c < n; ++c) {
      uint64_t m = 0;
      for (int r = 0; r < n; ++r) m |= uint64_t{1} << cell_index(n, r, c);
      fg.col_mask[c] = m;
    }
    if (game != RuleSet::Tak) {
      for (int r = 0; r < n; ++r) add_target(fg, fg.row_mask[r]);
      for (int c = 0; c < n; ++c) add_target(fg, fg.col_mask[c]);
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const int idx = cell_index(n, r, c);
        uint64_t adj = 0;
        if (c > 0) adj |= uint64_t{1} << (idx - 1);
        if (c + 1 < n) adj |= uint64_t{1} << (idx + 1);
        if (r > 0) adj |= uint64_t{1} << (idx - n);
        if (r + 1 < n) adj |= uint64_t{1} << (idx + n);
        fg.adjacent[idx] = adj;
        uint8_t touch = 0;
        if (c == 0) touch |= 1;
        if (c == n - 1) touch |= 2;
        if (r == 0) touch |= 4;
        if (r == n - 1) touch |= 8;
        fg.edge_touch[idx] = touch;
      }
    if (game == RuleSet::Tak) {
      for (int r = 1; r + 1 < n; ++r)
        for (int c = 1; c + 1 < n; ++c) {
          const int idx = cell_index(n, r, c);
          fg.crosses.push_back((uint64_t{1} << idx) | fg.adjacent[idx]);
        }
    }
  }

  fg.byte_table.resize(8);
  for (int t = 0; t < 8; ++t) {
    const Transform tr = all_transforms[t];
    for (int i = 0; i < fg.universe; ++i)
      fg.perm[t][i] = static_cast<int8_t>(map_universe_index(tr, game, n, i));
    for (int bp = 0; bp < 8; ++bp)
      for (int v = 0; v < 256; ++v) {
        uint64_t out = 0;
        for (int bit = 0; bit < 8; ++bit) {
          if (!((v >> bit) & 1)) continue;
          const int idx = bp * 8 + bit;
          if (idx < fg.universe) out |= uint64_t{1} << fg.perm[t][idx];
        }
        fg.byte_table[t][bp][v] = out;
      }
  }
  return fg;
}

// Components of the occupied set with edge-contact flags, for the Tak checks.
struct TakComponents {
  std::array<int8_t, 64> root{};
  std::array<uint8_t, 64> flag{};  // indexed by root

  void compute(const FastGame& fg, uint64_t occ) {
    std::array<int8_t, 64> parent;
    uint64_t bits = occ;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      parent[i] = static_cast<int8_t>(i);
    }
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    bits = occ;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      uint64_t nb = fg.adjacent[i] & occ;
      while (nb) {
        const int j = std::countr_zero(nb);
        nb &= nb - 1;
        if (j > i) break;  // neighbours above i handled when i was j's neighbour
        const int a = find(i);
        const int b = find(j);
        if (a != b) parent[a] = static_cast<int8_t>(b);
      }
    }
    std::array<uint8_t, 64> acc{};
    bits = occ;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      acc[find(i)] |= fg.edge_touch[i];
    }
    bits = occ;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      root[i] = static_cast<int8_t>(find(i));
      flag[i] = acc[root[i]];
    }
  }
};

constexpr bool covers(uint8_t f) { return (f & 3) == 3 || (f & 12) == 12; }

}  // namespace

bool FastGame::won(uint64_t occ) const {
  switch (game) {
    case RuleSet::Tak:
      return kernels::tak_spans64(occ, n);
    case RuleSet::Tic:
    case RuleSet::DbAbbrev:
      for (uint64_t t : targets)
        if ((occ & t) == t) return true;
      return false;
    case RuleSet::DualTic:
      for (uint64_t t : targets)
        if ((occ & t) == 0) return true;
      return false;
  }
  return false;
}

bool FastGame::move_wins(uint64_t occ, int idx) const {
  const uint64_t next = removal ? (occ & ~(uint64_t{1} << idx)) : (occ | uint64_t{1} << idx);
  if (game != RuleSet::Tak) {
    for (int8_t t : targets_of[idx]) {
      if (t < 0) break;
      if (removal ? (next & targets[t]) == 0 : (next & targets[t]) == targets[t]) return true;
    }
    return false;
  }
  return kernels::tak_spans64(next, n);
}

uint64_t FastGame::winning_moves(uint64_t occ) const {
  uint64_t wins = 0;
  if (game == RuleSet::Tak) {
    TakComponents comps;
    comps.compute(*this, occ);
    uint64_t bits = full & ~occ;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      uint8_t f = edge_touch[i];
      uint64_t nb = adjacent[i] & occ;
      while (nb) {
        const int j = std::countr_zero(nb);
        nb &= nb - 1;
        f |= comps.flag[j];
      }
      if (covers(f)) wins |= uint64_t{1} << i;
    }
    return wins;
  }
  for (uint64_t t : targets) {
    if (removal) {
      const uint64_t present = occ & t;
      if (std::popcount(present) == 1) wins |= present;  // last token of a line
    } else {
      const uint64_t missing = t & ~occ;
      if (std::popcount(missing) == 1) wins |= missing;  // completes the target
    }
  }
  return wins;
}

bool FastGame::is_penult(uint64_t occ) const {
  if (game == RuleSet::Tak) {
    if (won(occ)) return false;
    TakComponents comps;
    comps.compute(*this, occ);
    const uint64_t free = full & ~occ;

    // Base combined flags and adjacent-root sets for every free cell.
    std::array<uint8_t, 64> base{};
    std::array<uint64_t, 64> roots{};
    uint64_t bits = free;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      uint8_t f = edge_touch[i];
      uint64_t rs = 0;
      uint64_t nb = adjacent[i] & occ;
      while (nb) {
        const int j = std::countr_zero(nb);
        nb &= nb - 1;
        f |= comps.flag[j];
        rs |= uint64_t{1} << comps.root[j];
      }
      if (covers(f)) return false;  // a single placement wins: option terminal
      base[i] = f;
      roots[i] = rs;
    }

    // Every option must have a winning reply.
    bits = free;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      const uint8_t merged = base[i];   // flags of the component formed by playing i
      const uint64_t merged_roots = roots[i];
      bool has_reply = false;
      uint64_t js = free & ~(uint64_t{1} << i);
      while (js) {
        const int j = std::countr_zero(js);
        js &= js - 1;
        uint8_t f = base[j];
        if ((roots[j] & merged_roots) != 0 || ((adjacent[j] >> i) & 1)) f |= merged;
        if (covers(f)) {
          has_reply = true;
          break;
        }
      }
      if (!has_reply) return false;
    }
    return true;
  }

  // Containment games: every target must be two short of deciding the game,
  // and every legal move must sit in a target that is exactly two short.
  const int total = static_cast<int>(targets.size());
  std::array<int8_t, 40> need{};
  for (int t = 0; t < total; ++t) {
    const int count = std::popcount(occ & targets[t]);
    const int size = std::popcount(targets[t]);
    const int d = removal ? count : size - count;  // moves until this target decides
    if (d < 2) return false;
    need[t] = static_cast<int8_t>(d);
  }
  uint64_t ms = moves(occ);
  while (ms) {
    const int i = std::countr_zero(ms);
    ms &= ms - 1;
    bool in_two = false;
    for (int8_t t : targets_of[i]) {
      if (t < 0) break;
      if (need[t] == 2) {
        in_two = true;
        break;
      }
    }
    if (!in_two) return false;
  }
  return true;
}

Board FastGame::board(uint64_t m) const {
  Board b = Board::empty(game, n);
  b.words[0] = m;
  return b;
}

uint64_t FastGame::mask(const Board& b) const { return b.words[0]; }

const FastGame& fast_game(RuleSet game, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FastGame> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({static_cast<int>(game), n});
  if (inserted) it->second = build(game, n);
  return it->second;
}

}  // namespace penult
