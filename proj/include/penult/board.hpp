#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace penult {

enum class RuleSet : uint8_t { Tak, Tic, DualTic, DbAbbrev };

const char* rules_name(RuleSet game);
RuleSet rules_from_name(const std::string& name);  // throws std::invalid_argument

// Universe: n*n cells for the grid games, 2*n*(n-1) edges for dots-and-boxes
// (n = dots per side).  Edge order is pinned: all horizontal edges row-major
// first, then all vertical edges row-major.
int universe_size(RuleSet game, int n);
int max_side(RuleSet game);

// A position is its occupancy mask over the move universe.  For Tak, Tic and
// DbAbbrev a set bit is a placed token/edge; for DualTic a set bit is a token
// still on the board (moves remove tokens).
struct Board {
  RuleSet game = RuleSet::Tak;
  uint8_t n = 1;
  std::array<uint64_t, 8> words{};  // bit i = universe index i

  static Board empty(RuleSet game, int n);

  int universe() const { return universe_size(game, n); }
  bool test(int idx) const { return (words[idx >> 6] >> (idx & 63)) & 1u; }
  void set(int idx) { words[idx >> 6] |= uint64_t{1} << (idx & 63); }
  void reset(int idx) { words[idx >> 6] &= ~(uint64_t{1} << (idx & 63)); }
  uint64_t low64() const { return words[0]; }

  bool operator==(const Board&) const = default;
};

int cell_index(int n, int r, int c);
int h_edge_index(int n, int r, int c);  // between dots (r,c) and (r,c+1)
int v_edge_index(int n, int r, int c);  // between dots (r,c) and (r+1,c)

struct EdgeRef {
  char kind;  // 'h' or 'v'
  int r;
  int c;
};
EdgeRef edge_of_index(int n, int idx);

int token_count(const Board& b);

// Row-major lexicographic order on occupancy: of two boards, the one that is
// empty at the first differing universe index is the smaller.
bool mask_less(const Board& a, const Board& b);

// Swaps Tic <-> DualTic and inverts the mask inside the universe.  Rejects
// Tak and DbAbbrev boards.
Board complement(const Board& b);

struct BoardHash {
  size_t operator()(const Board& b) const;
};

}  // namespace penult
