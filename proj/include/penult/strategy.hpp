#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "penult/board.hpp"

namespace penult {

enum class MirrorAxis { Origin, VerticalCenterLine, HorizontalCenterLine, MainDiagonal, AntiDiagonal };
enum class Role { First, Second };

const char* axis_name(MirrorAxis a);
MirrorAxis axis_from_name(const std::string& name);

struct MirrorStrategy {
  MirrorAxis axis = MirrorAxis::Origin;
  bool opening_center = false;  // only sensible for role First on odd boards
  Role role = Role::Second;
};

std::pair<int, int> mirror_image(int n, std::pair<int, int> cell, MirrorAxis axis);

// The strategy player's move from `b`: an immediately winning move if one
// exists (row-major first), else the centre opening, else the unique cell
// restoring the axis symmetry of the occupied set.  nullopt means the
// strategy has no well-defined move (a breakdown, counted as a loss).
std::optional<int> strategy_move(const Board& b, const MirrorStrategy& s);

struct PlayLine {
  RuleSet game{};
  int n = 0;
  std::vector<int> moves;        // universe indices from the start position
  Role winner = Role::First;
  std::vector<int> strategy_moves;  // positions in `moves` played by the strategy
  bool breakdown = false;        // line ended because the strategy had no move
};

std::string playline_to_json(const PlayLine& line);

struct ValidateOptions {
  uint64_t node_budget = 200'000'000;
  // called after each strategy move while exploring: (position before the
  // move, the move played)
  std::function<void(const Board&, int)> observer;
};

struct ValidateResult {
  bool wins_all = false;
  std::optional<PlayLine> counterexample;  // shortest, then lexicographically least
  bool budget_exceeded = false;
  uint64_t nodes = 0;
};

// Exhaustively plays every adversary line against the mirroring strategy,
// memoizing on position (turn and strategy state are position-determined).
ValidateResult validate_strategy(RuleSet game, int n, const MirrorStrategy& s,
                                 const ValidateOptions& opts = {});

}  // namespace penult
