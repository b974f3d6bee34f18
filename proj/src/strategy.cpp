#include "penult/strategy.hpp"

#include <bit>
#include <cstdint>
#include <json.hpp>
#include <stdexcept>
#include <unordered_map>

#include "penult/fastboard.hpp"
#include "penult/games.hpp"

namespace penult {

const char* axis_name(MirrorAxis a) {
  switch (a) {
    case MirrorAxis::Origin: return "origin";
    case MirrorAxis::VerticalCenterLine: return "vline";
    case MirrorAxis::HorizontalCenterLine: return "hline";
    case MirrorAxis::MainDiagonal: return "diag";
    case MirrorAxis::AntiDiagonal: return "antidiag";
  }
  return "?";
}

MirrorAxis axis_from_name(const std::string& name) {
  if (name == "origin") return MirrorAxis::Origin;
  if (name == "vline") return MirrorAxis::VerticalCenterLine;
  if (name == "hline") return MirrorAxis::HorizontalCenterLine;
  if (name == "diag") return MirrorAxis::MainDiagonal;
  if (name == "antidiag") return MirrorAxis::AntiDiagonal;
  throw std::invalid_argument("unknown axis: " + name);
}

std::pair<int, int> mirror_image(int n, std::pair<int, int> cell, MirrorAxis axis) {
  const auto [r, c] = cell;
  switch (axis) {
    case MirrorAxis::Origin: return {n - 1 - r, n - 1 - c};
    case MirrorAxis::VerticalCenterLine: return {r, n - 1 - c};
    case MirrorAxis::HorizontalCenterLine: return {n - 1 - r, c};
    case MirrorAxis::MainDiagonal: return {c, r};
    case MirrorAxis::AntiDiagonal: return {n - 1 - c, n - 1 - r};
  }
  return cell;
}

namespace {

int mirror_index(int n, int idx, MirrorAxis axis) {
  const auto [r, c] = mirror_image(n, {idx / n, idx % n}, axis);
  return cell_index(n, r, c);
}

void check_strategy_game(RuleSet game) {
  if (game != RuleSet::Tak && game != RuleSet::Tic)
    throw std::invalid_argument("mirroring strategies apply to tak and tic");
}

bool strategys_turn(int tokens, Role role) {
  return (tokens % 2 == 0) == (role == Role::First);
}

}  // namespace

std::optional<int> strategy_move(const Board& b, const MirrorStrategy& s) {
  check_strategy_game(b.game);
  if (s.opening_center && (s.role != Role::First || b.n % 2 == 0))
    throw std::invalid_argument("centre opening needs role=first and odd n");
  const int tokens = token_count(b);
  if (!strategys_turn(tokens, s.role))
    throw std::invalid_argument("not the strategy player's turn");
  const FastGame& fg = fast_game(b.game, b.n);
  const uint64_t occ = fg.mask(b);

  // 1. take any immediate win, row-major first
  const uint64_t wins = fg.winning_moves(occ);
  if (wins) return std::countr_zero(wins);

  // 2. centre opening
  if (tokens == 0 && s.opening_center) return cell_index(b.n, b.n / 2, b.n / 2);

  // 3. restore symmetry: mirror the unique unmatched cell
  int unmatched = -1;
  uint64_t bits = occ;
  while (bits) {
    const int i = std::countr_zero(bits);
    bits &= bits - 1;
    const int m = mirror_index(b.n, i, s.axis);
    if ((occ >> m) & 1u) continue;
    if (unmatched >= 0) return std::nullopt;  // more than one: no unique restore
    unmatched = i;
  }
  if (unmatched < 0) return std::nullopt;  // already symmetric: nothing to mirror
  return mirror_index(b.n, unmatched, s.axis);
}

std::string playline_to_json(const PlayLine& line) {
  nlohmann::ordered_json j;
  j["game"] = rules_name(line.game);
  j["n"] = line.n;
  auto moves = nlohmann::json::array();
  for (int idx : line.moves) moves.push_back({idx / line.n, idx % line.n});
  j["moves"] = std::move(moves);
  j["winner"] = line.winner == Role::First ? "first" : "second";
  j["strategy_moves"] = line.strategy_moves;
  if (line.breakdown) j["breakdown"] = true;
  return j.dump();
}

namespace {

constexpr int kNoLoss = INT32_MAX / 2;

// A line can fail two ways: the adversary actually wins, or the strategy has
// no well-defined move (a breakdown, counted as a loss conservatively).  The
// verdict considers both; the reported counterexample prefers a real loss so
// that it replays to a won position.
struct Node {
  bool survives = false;
  int32_t real_depth = kNoLoss;  // plies to the nearest adversary win
  int32_t bd_depth = kNoLoss;    // plies to the nearest breakdown
  int16_t choice_real = -1;
  int16_t choice_bd = -1;
};

struct Validator {
  const FastGame& fg;
  const MirrorStrategy& strat;
  const ValidateOptions& opts;
  std::unordered_map<uint64_t, Node> memo;
  uint64_t nodes = 0;
  bool out_of_budget = false;

  Validator(const FastGame& f, const MirrorStrategy& s, const ValidateOptions& o)
      : fg(f), strat(s), opts(o) {}

  std::optional<int> pick_strategy_move(uint64_t occ) const {
    const uint64_t wins = fg.winning_moves(occ);
    if (wins) return std::countr_zero(wins);
    const int tokens = std::popcount(occ);
    if (tokens == 0 && strat.opening_center)
      return cell_index(fg.n, fg.n / 2, fg.n / 2);
    int unmatched = -1;
    uint64_t bits = occ;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      const int m = mirror_index(fg.n, i, strat.axis);
      if ((occ >> m) & 1u) continue;
      if (unmatched >= 0) return std::nullopt;
      unmatched = i;
    }
    if (unmatched < 0) return std::nullopt;
    return mirror_index(fg.n, unmatched, strat.axis);
  }

  // `occ` is never a won position here.
  const Node& explore(uint64_t occ) {
    if (const auto it = memo.find(occ); it != memo.end()) return it->second;
    if (++nodes > opts.node_budget) out_of_budget = true;
    Node node;
    if (out_of_budget) {
      node.survives = true;  // placeholder; the whole result is discarded
      return memo.emplace(occ, node).first->second;
    }
    const int tokens = std::popcount(occ);
    if (strategys_turn(tokens, strat.role)) {
      const std::optional<int> move = pick_strategy_move(occ);
      if (!move) {
        node.survives = false;
        node.bd_depth = 0;
      } else {
        if (opts.observer) opts.observer(fg.board(occ), *move);
        node.choice_real = node.choice_bd = static_cast<int16_t>(*move);
        const uint64_t next = occ | uint64_t{1} << *move;
        if (fg.won(next)) {
          node.survives = true;
        } else {
          const Node& child = explore(next);
          node.survives = child.survives;
          if (child.real_depth < kNoLoss) node.real_depth = child.real_depth + 1;
          if (child.bd_depth < kNoLoss) node.bd_depth = child.bd_depth + 1;
        }
      }
    } else {
      node.survives = true;
      uint64_t ms = fg.moves(occ);
      while (ms) {
        const int a = std::countr_zero(ms);
        ms &= ms - 1;
        const uint64_t next = occ | uint64_t{1} << a;
        int32_t real = kNoLoss, bd = kNoLoss;
        if (fg.won(next)) {
          real = 1;  // the adversary just won
        } else {
          const Node& child = explore(next);
          if (child.real_depth < kNoLoss) real = child.real_depth + 1;
          if (child.bd_depth < kNoLoss) bd = child.bd_depth + 1;
        }
        if (real < node.real_depth) {
          node.real_depth = real;
          node.choice_real = static_cast<int16_t>(a);
        }
        if (bd < node.bd_depth) {
          node.bd_depth = bd;
          node.choice_bd = static_cast<int16_t>(a);
        }
        if (real < kNoLoss || bd < kNoLoss) node.survives = false;
      }
    }
    return memo.emplace(occ, node).first->second;
  }

  PlayLine reconstruct(uint64_t start) {
    PlayLine line;
    line.game = fg.game;
    line.n = fg.n;
    line.winner = strat.role == Role::First ? Role::Second : Role::First;
    const bool real = memo.at(start).real_depth < kNoLoss;
    uint64_t occ = start;
    for (;;) {
      const int tokens = std::popcount(occ);
      const bool ours = strategys_turn(tokens, strat.role);
      const Node& node = memo.at(occ);
      if (ours && !real && node.bd_depth == 0) {
        line.breakdown = true;
        return line;
      }
      const int move = real ? node.choice_real : node.choice_bd;
      if (ours) line.strategy_moves.push_back(static_cast<int>(line.moves.size()));
      line.moves.push_back(move);
      occ |= uint64_t{1} << move;
      if (fg.won(occ)) return line;
    }
  }
};

}  // namespace

ValidateResult validate_strategy(RuleSet game, int n, const MirrorStrategy& s,
                                 const ValidateOptions& opts) {
  check_strategy_game(game);
  if (s.opening_center && (s.role != Role::First || n % 2 == 0))
    throw std::invalid_argument("centre opening needs role=first and odd n");
  const FastGame& fg = fast_game(game, n);
  Validator v(fg, s, opts);
  const Node root = v.explore(0);
  ValidateResult result;
  result.nodes = v.nodes;
  if (v.out_of_budget) {
    result.budget_exceeded = true;
    return result;
  }
  result.wins_all = root.survives;
  if (!root.survives) result.counterexample = v.reconstruct(0);
  return result;
}

}  // namespace penult
