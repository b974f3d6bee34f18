#include "penult/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "penult/fastboard.hpp"
#include "penult/games.hpp"

namespace penult {

const char* outcome_name(Outcome o) { return o == Outcome::Win ? "W" : "L"; }

GridSolver::GridSolver(RuleSet game, int n) : fg_(fast_game(game, n)) {}

uint64_t GridSolver::start_mask() const { return fg_.removal ? fg_.full : 0; }

Outcome GridSolver::outcome(const Board& b) {
  if (b.game != fg_.game || b.n != fg_.n) throw std::invalid_argument("board/solver mismatch");
  return outcome_mask(fg_.mask(b));
}

Outcome GridSolver::outcome_mask(uint64_t occ) {
  if (fg_.won(occ)) return Outcome::Loss;  // previous player ended the game
  return solve_mask(occ);
}

Outcome GridSolver::solve_start() { return outcome_mask(start_mask()); }

Outcome GridSolver::solve_mask(uint64_t occ) {
  const uint64_t key = fg_.canonical64(occ);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  // immediate wins settle the position without recursion
  if (fg_.winning_moves(occ)) {
    memo_.emplace(key, Outcome::Win);
    return Outcome::Win;
  }
  Outcome result = Outcome::Loss;
  uint64_t ms = fg_.moves(occ);
  while (ms) {
    const int i = std::countr_zero(ms);
    ms &= ms - 1;
    const uint64_t next =
        fg_.removal ? (occ & ~(uint64_t{1} << i)) : (occ | uint64_t{1} << i);
    if (solve_mask(next) == Outcome::Loss) {
      result = Outcome::Win;
      break;
    }
  }
  memo_.emplace(key, result);
  return result;
}

int GridSolver::mate_in(const Board& b) {
  if (b.game != fg_.game || b.n != fg_.n) throw std::invalid_argument("board/solver mismatch");
  const uint64_t occ = fg_.mask(b);
  if (outcome_mask(occ) == Outcome::Win)
    throw std::domain_error("mate depth is defined for losing positions only");
  return mate_mask(occ);
}

int GridSolver::mate_mask(uint64_t occ) {
  if (fg_.won(occ)) return 0;
  const uint64_t key = fg_.canonical64(occ);
  if (const auto it = mate_memo_.find(key); it != mate_memo_.end()) return it->second;
  int best = 0;
  uint64_t ms = fg_.moves(occ);
  while (ms) {
    const int i = std::countr_zero(ms);
    ms &= ms - 1;
    const uint64_t option =
        fg_.removal ? (occ & ~(uint64_t{1} << i)) : (occ | uint64_t{1} << i);
    // the winner answers with the losing reply that ends the game fastest
    int reply_best = -1;
    if (fg_.winning_moves(option)) {
      reply_best = 0;
    } else {
      uint64_t rs = fg_.moves(option);
      while (rs) {
        const int j = std::countr_zero(rs);
        rs &= rs - 1;
        const uint64_t reply =
            fg_.removal ? (option & ~(uint64_t{1} << j)) : (option | uint64_t{1} << j);
        if (solve_mask(reply) == Outcome::Loss) {
          const int depth = mate_mask(reply);
          if (reply_best < 0 || depth < reply_best) reply_best = depth;
        }
      }
    }
    // every option of a losing position is a win, so a losing reply exists
    if (reply_best >= 0) best = std::max(best, 1 + reply_best);
  }
  mate_memo_.emplace(key, best);
  return best;
}

Outcome solve(RuleSet game, int n) { return GridSolver(game, n).solve_start(); }

Outcome solve_naive(const Board& b) {
  if (is_won(b)) return Outcome::Loss;
  for (int m : legal_moves(b))
    if (solve_naive(apply_move(b, m)) == Outcome::Loss) return Outcome::Win;
  return Outcome::Loss;
}

// ---- auxiliary heap games ----

Outcome outcome_subtract123(long long heap) {
  if (heap < 0) throw std::invalid_argument("negative heap");
  return heap % 4 == 0 ? Outcome::Loss : Outcome::Win;
}

int mate_in_subtract123(long long heap) {
  if (outcome_subtract123(heap) == Outcome::Win)
    throw std::domain_error("mate depth is defined for losing positions only");
  // options 4k-1..4k-3 all answer back to 4(k-1); depth counts the pairs
  return static_cast<int>(heap / 4);
}

namespace {

long long nim_xor(const std::vector<long long>& heaps) {
  long long x = 0;
  for (long long h : heaps) {
    if (h < 0) throw std::invalid_argument("negative heap");
    x ^= h;
  }
  return x;
}

struct NimState {
  std::vector<long long> heaps;  // sorted, zeros dropped
  bool operator<(const NimState& o) const { return heaps < o.heaps; }
};

NimState nim_norm(std::vector<long long> heaps) {
  std::erase(heaps, 0);
  std::sort(heaps.begin(), heaps.end());
  return {std::move(heaps)};
}

int nim_mate(const NimState& s, std::map<NimState, int>& memo);

// smallest mate depth over the losing replies of a winning position
int nim_reply_depth(const NimState& s, std::map<NimState, int>& memo) {
  int best = -1;
  for (size_t i = 0; i < s.heaps.size(); ++i)
    for (long long take = 1; take <= s.heaps[i]; ++take) {
      std::vector<long long> next = s.heaps;
      next[i] -= take;
      if (nim_xor(next) != 0) continue;
      const NimState r = nim_norm(std::move(next));
      const int depth = r.heaps.empty() ? 0 : nim_mate(r, memo);
      if (best < 0 || depth < best) best = depth;
    }
  return best;
}

int nim_mate(const NimState& s, std::map<NimState, int>& memo) {
  if (s.heaps.empty()) return 0;
  if (const auto it = memo.find(s); it != memo.end()) return it->second;
  int best = 0;
  for (size_t i = 0; i < s.heaps.size(); ++i)
    for (long long take = 1; take <= s.heaps[i]; ++take) {
      std::vector<long long> next = s.heaps;
      next[i] -= take;
      const int reply = nim_reply_depth(nim_norm(std::move(next)), memo);
      if (reply >= 0) best = std::max(best, 1 + reply);
    }
  memo[s] = best;
  return best;
}

}  // namespace

Outcome outcome_nim(std::vector<long long> heaps) {
  return nim_xor(heaps) == 0 ? Outcome::Loss : Outcome::Win;
}

int mate_in_nim(std::vector<long long> heaps) {
  if (outcome_nim(heaps) == Outcome::Win)
    throw std::domain_error("mate depth is defined for losing positions only");
  static std::map<NimState, int> memo;
  return nim_mate(nim_norm(std::move(heaps)), memo);
}

namespace {

struct WythoffTables {
  // outcome and mate depth over a bounded grid, filled on demand
  int limit = 0;
  std::vector<uint8_t> loss;
  std::vector<int> mate;

  int idx(long long a, long long b) const { return static_cast<int>(a * limit + b); }

  void ensure(long long need) {
    const int want = static_cast<int>(need) + 1;
    if (want <= limit) return;
    limit = std::max(want, 64);
    loss.assign(static_cast<size_t>(limit) * limit, 0);
    mate.assign(static_cast<size_t>(limit) * limit, -1);
    for (long long s = 0; s < 2 * limit - 1; ++s)
      for (long long a = 0; a < limit; ++a) {
        const long long b = s - a;
        if (b < 0 || b >= limit) continue;
        bool any_loss = false;
        auto probe = [&](long long x, long long y) {
          if (!any_loss && loss[idx(x, y)]) any_loss = true;
        };
        for (long long t = 1; t <= a && !any_loss; ++t) probe(a - t, b);
        for (long long t = 1; t <= b && !any_loss; ++t) probe(a, b - t);
        for (long long t = 1; t <= std::min(a, b) && !any_loss; ++t) probe(a - t, b - t);
        loss[idx(a, b)] = !any_loss;
      }
  }

  int mate_at(long long a, long long b) {
    int& slot = mate[idx(a, b)];
    if (slot >= 0) return slot;
    if (a == 0 && b == 0) return slot = 0;
    int best = 0;
    auto reply_depth = [&](long long x, long long y) {
      // minimal mate depth over losing replies from the option (x, y)
      int rb = -1;
      auto probe = [&](long long px, long long py) {
        if (!loss[idx(px, py)]) return;
        const int d = mate_at(px, py);
        if (rb < 0 || d < rb) rb = d;
      };
      for (long long t = 1; t <= x; ++t) probe(x - t, y);
      for (long long t = 1; t <= y; ++t) probe(x, y - t);
      for (long long t = 1; t <= std::min(x, y); ++t) probe(x - t, y - t);
      return rb;
    };
    auto consider = [&](long long x, long long y) {
      const int rb = reply_depth(x, y);
      if (rb >= 0) best = std::max(best, 1 + rb);
    };
    for (long long t = 1; t <= a; ++t) consider(a - t, b);
    for (long long t = 1; t <= b; ++t) consider(a, b - t);
    for (long long t = 1; t <= std::min(a, b); ++t) consider(a - t, b - t);
    return slot = best;
  }
};

WythoffTables& wythoff_tables() {
  static WythoffTables tables;
  return tables;
}

}  // namespace

Outcome outcome_wythoff(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative pile");
  auto& t = wythoff_tables();
  t.ensure(std::max(a, b));
  return t.loss[t.idx(a, b)] ? Outcome::Loss : Outcome::Win;
}

int mate_in_wythoff(long long a, long long b) {
  if (outcome_wythoff(a, b) == Outcome::Win)
    throw std::domain_error("mate depth is defined for losing positions only");
  auto& t = wythoff_tables();
  return t.mate_at(a, b);
}

long long isqrt(long long v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  if (v < 2) return v;
  long long x = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (x > 0 && x * x > v) --x;
  while ((x + 1) * (x + 1) <= v) ++x;
  return x;
}

std::pair<long long, long long> wythoff_L(long long k) {
  if (k < 0) throw std::invalid_argument("negative index");
  if (k > 1'000'000'000) throw std::invalid_argument("index too large for exact arithmetic");
  const long long a = (k + isqrt(5 * k * k)) / 2;
  return {a, a + k};
}

}  // namespace penult
