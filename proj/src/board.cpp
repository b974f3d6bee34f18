#include "penult/board.hpp"

#include <bit>
#include <stdexcept>

namespace penult {

const char* rules_name(RuleSet game) {
  switch (game) {
    case RuleSet::Tak: return "tak";
    case RuleSet::Tic: return "tic";
    case RuleSet::DualTic: return "dualtic";
    case RuleSet::DbAbbrev: return "db";
  }
  return "?";
}

RuleSet rules_from_name(const std::string& name) {
  if (name == "tak") return RuleSet::Tak;
  if (name == "tic") return RuleSet::Tic;
  if (name == "dualtic") return RuleSet::DualTic;
  if (name == "db") return RuleSet::DbAbbrev;
  throw std::invalid_argument("unknown rule set: " + name);
}

int max_side(RuleSet game) { return game == RuleSet::DbAbbrev ? 16 : 18; }

int universe_size(RuleSet game, int n) {
  if (n < 1 || n > max_side(game)) throw std::invalid_argument("side length out of range");
  if (game == RuleSet::DbAbbrev) return 2 * n * (n - 1);
  return n * n;
}

Board Board::empty(RuleSet game, int n) {
  universe_size(game, n);  // validates n
  Board b;
  b.game = game;
  b.n = static_cast<uint8_t>(n);
  return b;
}

int cell_index(int n, int r, int c) { return r * n + c; }

int h_edge_index(int n, int r, int c) { return r * (n - 1) + c; }

int v_edge_index(int n, int r, int c) { return n * (n - 1) + r * n + c; }

EdgeRef edge_of_index(int n, int idx) {
  const int h_total = n * (n - 1);
  if (idx < h_total) return {'h', idx / (n - 1), idx % (n - 1)};
  idx -= h_total;
  return {'v', idx / n, idx % n};
}

int token_count(const Board& b) {
  int total = 0;
  for (uint64_t w : b.words) total += std::popcount(w);
  return total;
}

bool mask_less(const Board& a, const Board& b) {
  for (int w = 0; w < 8; ++w) {
    const uint64_t diff = a.words[w] ^ b.words[w];
    if (diff) {
      const int bit = std::countr_zero(diff);
      return ((a.words[w] >> bit) & 1u) == 0;
    }
  }
  return false;
}

Board complement(const Board& b) {
  if (b.game != RuleSet::Tic && b.game != RuleSet::DualTic)
    throw std::invalid_argument("complement is defined for tic/dualtic boards only");
  Board out = b;
  out.game = b.game == RuleSet::Tic ? RuleSet::DualTic : RuleSet::Tic;
  const int u = b.universe();
  for (int w = 0; w < 8; ++w) out.words[w] = ~b.words[w];
  // clear bits outside the universe
  for (int i = u; i < 512; ++i) out.words[i >> 6] &= ~(uint64_t{1} << (i & 63));
  return out;
}

size_t BoardHash::operator()(const Board& b) const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(b.game) << 8 | b.n);
  for (uint64_t w : b.words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return static_cast<size_t>(h);
}

}  // namespace penult
