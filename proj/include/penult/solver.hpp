#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "penult/board.hpp"

namespace penult {

enum class Outcome : uint8_t { Win, Loss };  // for the player to move
const char* outcome_name(Outcome o);

// Exact normal-play solver for one (game, n), memoized on canonical
// occupancy.  Supported for universes of at most 64 moves.
class GridSolver {
 public:
  GridSolver(RuleSet game, int n);

  Outcome outcome(const Board& b);
  Outcome outcome_mask(uint64_t occ);

  // Start position: empty board, or all tokens present for DualTic.
  Outcome solve_start();

  // Largest k such that the losing side can force 2k further moves; defined
  // for losing positions only (throws std::domain_error on a win).
  int mate_in(const Board& b);

  // canonical occupancy -> outcome, for everything visited so far
  const std::unordered_map<uint64_t, Outcome>& table() const { return memo_; }

  uint64_t start_mask() const;

 private:
  Outcome solve_mask(uint64_t occ);
  int mate_mask(uint64_t occ);

  const struct FastGame& fg_;
  std::unordered_map<uint64_t, Outcome> memo_;
  std::unordered_map<uint64_t, int> mate_memo_;
};

Outcome solve(RuleSet game, int n);

// Reference solver without memoization or canonicalization (small n only).
Outcome solve_naive(const Board& b);

// Auxiliary heap games.  States: a single heap; a multiset of heaps; an
// ordered pair.  Same conventions: Outcome is for the player to move and
// mate_in is defined on losses only.
Outcome outcome_subtract123(long long heap);
int mate_in_subtract123(long long heap);

Outcome outcome_nim(std::vector<long long> heaps);
int mate_in_nim(std::vector<long long> heaps);

Outcome outcome_wythoff(long long a, long long b);
int mate_in_wythoff(long long a, long long b);

// k-th losing position of the two-pile game: (floor(k*phi), floor(k*phi)+k),
// computed in exact integer arithmetic via isqrt(5k^2).
std::pair<long long, long long> wythoff_L(long long k);
long long isqrt(long long v);

}  // namespace penult
