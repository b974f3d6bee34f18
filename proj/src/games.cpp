#include "penult/games.hpp"

#include <array>

namespace penult {

namespace {

// Union-find over occupied cells; each component carries flags for the board
// edges it touches.  A shared virtual node per edge would short-circuit
// distinct components through the corners, so the edges live in the flags.
struct SpanFinder {
  static constexpr int kMaxCells = 18 * 18;
  std::array<int16_t, kMaxCells> parent;
  std::array<uint8_t, kMaxCells> flag;  // bit0 L, bit1 R, bit2 T, bit3 B

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = static_cast<int16_t>(b);
      flag[b] |= flag[a];
    }
  }
};

bool tak_won(const Board& b) {
  const int n = b.n;
  SpanFinder uf;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int idx = cell_index(n, r, c);
      if (!b.test(idx)) continue;
      uf.parent[idx] = static_cast<int16_t>(idx);
      uint8_t f = 0;
      if (c == 0) f |= 1;
      if (c == n - 1) f |= 2;
      if (r == 0) f |= 4;
      if (r == n - 1) f |= 8;
      uf.flag[idx] = f;
      if (c > 0 && b.test(idx - 1)) uf.unite(idx, idx - 1);
      if (r > 0 && b.test(idx - n)) uf.unite(idx, idx - n);
    }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int idx = cell_index(n, r, c);
      if (!b.test(idx)) continue;
      const uint8_t f = uf.flag[uf.find(idx)];
      if ((f & 3) == 3 || (f & 12) == 12) return true;
    }
  return false;
}

bool line_won(const Board& b, bool want_full) {
  const int n = b.n;
  for (int r = 0; r < n; ++r) {
    bool full = true, empty = true;
    for (int c = 0; c < n; ++c) {
      if (b.test(cell_index(n, r, c)))
        empty = false;
      else
        full = false;
    }
    if (want_full ? full : empty) return true;
  }
  for (int c = 0; c < n; ++c) {
    bool full = true, empty = true;
    for (int r = 0; r < n; ++r) {
      if (b.test(cell_index(n, r, c)))
        empty = false;
      else
        full = false;
    }
    if (want_full ? full : empty) return true;
  }
  return false;
}

bool db_won(const Board& b) {
  const int n = b.n;
  for (int r = 0; r + 1 < n; ++r)
    for (int c = 0; c + 1 < n; ++c)
      if (b.test(h_edge_index(n, r, c)) && b.test(h_edge_index(n, r + 1, c)) &&
          b.test(v_edge_index(n, r, c)) && b.test(v_edge_index(n, r, c + 1)))
        return true;
  return false;
}

}  // namespace

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Terminal: return "terminal";
    case Classification::Ult: return "ult";
    case Classification::Penult: return "penult";
    case Classification::Other: return "other";
  }
  return "?";
}

bool is_won(const Board& b) {
  switch (b.game) {
    case RuleSet::Tak: return tak_won(b);
    case RuleSet::Tic: return line_won(b, /*want_full=*/true);
    case RuleSet::DualTic: return line_won(b, /*want_full=*/false);
    case RuleSet::DbAbbrev: return db_won(b);
  }
  return false;
}

std::vector<int> legal_moves(const Board& b) {
  std::vector<int> moves;
  if (is_won(b)) return moves;
  const int u = b.universe();
  const bool removal = b.game == RuleSet::DualTic;
  for (int i = 0; i < u; ++i)
    if (b.test(i) == removal) moves.push_back(i);
  return moves;
}

Board apply_move(const Board& b, int idx) {
  Board out = b;
  if (b.game == RuleSet::DualTic)
    out.reset(idx);
  else
    out.set(idx);
  return out;
}

Classification classify(const Board& b) {
  if (is_won(b)) return Classification::Terminal;
  const int u = b.universe();
  const bool removal = b.game == RuleSet::DualTic;

  // First ply: a winning move makes this an ult.
  std::vector<int> moves;
  moves.reserve(u);
  for (int i = 0; i < u; ++i)
    if (b.test(i) == removal) moves.push_back(i);
  for (int m : moves)
    if (is_won(apply_move(b, m))) return Classification::Ult;

  if (moves.empty()) return Classification::Other;  // cannot arise in these games

  // Second ply: penult iff every option has a winning reply.
  for (int m : moves) {
    const Board option = apply_move(b, m);
    bool option_is_ult = false;
    for (int m2 : moves) {
      if (m2 == m) continue;
      if (is_won(apply_move(option, m2))) {
        option_is_ult = true;
        break;
      }
    }
    if (!option_is_ult) return Classification::Other;
  }
  return Classification::Penult;
}

}  // namespace penult
