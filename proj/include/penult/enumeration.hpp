#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_set>
#include <vector>

#include "penult/board.hpp"

namespace penult {

struct EnumOptions {
  uint64_t node_budget = 1'000'000'000;
  int workers = 0;       // 0 = hardware concurrency
  int prefix_depth = 8;  // parallel split on the first k decided cells

  // When positive, restrict the search to boards with at most this many
  // tokens.  The result is then complete for that range only: every penult
  // class with a token count within the cap is found.
  int max_tokens = 0;

  // Resume support: skip prefixes below this value and treat the given
  // canonical masks as already emitted.
  uint64_t resume_from_prefix = 0;
  const std::unordered_set<uint64_t>* seed_classes = nullptr;

  // Called as the contiguous completed-prefix frontier advances, with the
  // next prefix to process, the classes found so far, and the canonical
  // masks newly attributed since the previous call (discovery order).
  std::function<void(uint64_t next_prefix, uint64_t emitted,
                     const std::vector<uint64_t>& fresh)>
      on_progress;
};

struct EnumResult {
  std::vector<Board> classes;  // sorted by (token count, canonical mask)
  bool complete = true;
  uint64_t nodes = 0;
  double seconds = 0.0;
  int prefix_depth = 0;
};

struct Spectrum {
  RuleSet game{};
  int n = 0;
  std::map<int, int> classes;  // token count -> number of nonisometric penults
  std::map<int, std::vector<Board>> representatives;
  bool complete = true;
};

// One canonical representative per isometry class of penults.  Supported for
// universes of at most 64 moves (grids to 8x8, dots-and-boxes to 5 dots); the
// node budget bounds the depth-first search, and an exhausted budget yields a
// partial result with complete=false.
EnumResult enumerate_penults(RuleSet game, int n, const EnumOptions& opts = {});

Spectrum spectrum(RuleSet game, int n, const EnumOptions& opts = {});
Spectrum spectrum_of(RuleSet game, int n, const std::vector<Board>& classes);

// Smallest and largest penult sizes L(n), U(n).  Throws std::domain_error if
// there are no penults at this size.
std::pair<int, int> extremes(RuleSet game, int n, const EnumOptions& opts = {});

bool is_interval(const Spectrum& s);

}  // namespace penult
