#include <doctest.h>

#include <stdexcept>

#include <bit>
#include <random>
#include <vector>

#include "penult/enumeration.hpp"
#include "penult/fastboard.hpp"
#include "penult/games.hpp"
#include "penult/solver.hpp"

using namespace penult;

TEST_SUITE("solver") {

TEST_CASE("start outcomes of the small boards") {
  CHECK(solve(RuleSet::Tak, 2) == Outcome::Loss);
  CHECK(solve(RuleSet::Tak, 3) == Outcome::Win);
  CHECK(solve(RuleSet::Tak, 4) == Outcome::Loss);
  CHECK(solve(RuleSet::Tic, 2) == Outcome::Loss);
  CHECK(solve(RuleSet::Tic, 3) == Outcome::Win);
  CHECK(solve(RuleSet::Tic, 4) == Outcome::Loss);
}

TEST_CASE("memoized solver agrees with plain negamax") {
  for (RuleSet game : {RuleSet::Tak, RuleSet::Tic, RuleSet::DualTic}) {
    for (int n = 1; n <= 3; ++n) {
      GridSolver solver(game, n);
      Board start = Board::empty(game, n);
      if (game == RuleSet::DualTic) start = complement(Board::empty(RuleSet::Tic, n));
      CHECK(solver.solve_start() == solve_naive(start));
    }
  }
  CHECK(GridSolver(RuleSet::DbAbbrev, 2).solve_start() ==
        solve_naive(Board::empty(RuleSet::DbAbbrev, 2)));
  // spot positions, not just the start
  std::mt19937_64 rng(7);
  GridSolver solver(RuleSet::Tak, 3);
  const FastGame& fg = fast_game(RuleSet::Tak, 3);
  for (int rep = 0; rep < 200; ++rep) {
    const uint64_t m = rng() & fg.full;
    CHECK(solver.outcome_mask(m) == solve_naive(fg.board(m)));
  }
}

TEST_CASE("dual game inherits the outcome of the direct game") {
  for (int n = 2; n <= 4; ++n)
    CHECK(solve(RuleSet::DualTic, n) == solve(RuleSet::Tic, n));
}

TEST_CASE("outcome recursion holds on the full solved table") {
  for (RuleSet game : {RuleSet::Tak, RuleSet::Tic}) {
    for (int n = 2; n <= 4; ++n) {
      GridSolver solver(game, n);
      solver.solve_start();
      const FastGame& fg = fast_game(game, n);
      std::vector<std::pair<uint64_t, Outcome>> rows(solver.table().begin(),
                                                     solver.table().end());
      // a position wins iff some option is losing for the opponent
      int bad = 0;
      for (const auto& [mask, out] : rows) {
        bool any_losing_option = fg.winning_moves(mask) != 0;
        uint64_t ms = fg.moves(mask);
        while (ms && !any_losing_option) {
          const int i = std::countr_zero(ms);
          ms &= ms - 1;
          if (solver.outcome_mask(mask | uint64_t{1} << i) == Outcome::Loss)
            any_losing_option = true;
        }
        if ((out == Outcome::Win) != any_losing_option) ++bad;
      }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("penults are exactly the losing positions of mate depth one") {
  for (RuleSet game : {RuleSet::Tak, RuleSet::Tic, RuleSet::DualTic}) {
    for (int n = 2; n <= 3; ++n) {
      GridSolver solver(game, n);
      const FastGame& fg = fast_game(game, n);
      Board b = Board::empty(game, n);
      for (uint64_t m = 0; m < (uint64_t{1} << fg.universe); ++m) {
        b.words[0] = m;
        const bool is_pen = classify(b) == Classification::Penult;
        const bool losing = solver.outcome_mask(m) == Outcome::Loss;
        const bool mate_one = losing && !fg.won(m) && solver.mate_in(b) == 1;
        CHECK(is_pen == mate_one);
      }
    }
  }
}

TEST_CASE("mate depth of subtract-1-2-3 multiples of four") {
  for (int k = 0; k <= 25; ++k) {
    CHECK(outcome_subtract123(4 * k) == Outcome::Loss);
    CHECK(mate_in_subtract123(4 * k) == k);
  }
  CHECK(mate_in_subtract123(12) == 3);
  CHECK(outcome_subtract123(7) == Outcome::Win);
  CHECK_THROWS_AS(mate_in_subtract123(7), std::domain_error);
}

TEST_CASE("mate depth of nim is half the remaining tokens") {
  CHECK(mate_in_nim({1, 1}) == 1);
  for (long long a = 0; a <= 8; ++a)
    for (long long b = a; b <= 8; ++b)
      for (long long c = b; c <= 8; ++c) {
        if ((a ^ b ^ c) != 0) continue;
        CHECK(mate_in_nim({a, b, c}) == (a + b + c) / 2);
      }
  CHECK_THROWS_AS(mate_in_nim({1, 2}), std::domain_error);
}

TEST_CASE("wythoff pairs by exact integer arithmetic") {
  CHECK(wythoff_L(0) == std::pair{0ll, 0ll});
  CHECK(wythoff_L(1) == std::pair{1ll, 2ll});
  CHECK(wythoff_L(2) == std::pair{3ll, 5ll});
  CHECK(wythoff_L(3) == std::pair{4ll, 7ll});  // isqrt(45) = 6
  CHECK(isqrt(45) == 6);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(4'000'000'000'000'000'000ll) == 2'000'000'000ll);
  CHECK(isqrt(3'999'999'999'999'999'999ll) == 1'999'999'999ll);
  // golden-ratio spacing: consecutive first coordinates differ by 1 or 2
  for (long long k = 1; k <= 1000; ++k) {
    const auto [a0, b0] = wythoff_L(k - 1);
    const auto [a1, b1] = wythoff_L(k);
    CHECK(b1 - a1 == k);
    CHECK((a1 - a0 == 1 || a1 - a0 == 2));
  }
}

TEST_CASE("wythoff mate depths match the pair index") {
  CHECK(mate_in_wythoff(3, 5) == 2);
  for (long long k = 0; k <= 15; ++k) {
    const auto [a, b] = wythoff_L(k);
    CHECK(outcome_wythoff(a, b) == Outcome::Loss);
    CHECK(outcome_wythoff(b, a) == Outcome::Loss);
    CHECK(mate_in_wythoff(a, b) == k);
  }
  CHECK(outcome_wythoff(1, 1) == Outcome::Win);
  CHECK_THROWS_AS(mate_in_wythoff(1, 1), std::domain_error);
}

TEST_CASE("grid mate depth rejects winning positions") {
  GridSolver solver(RuleSet::Tak, 3);
  Board nearly = Board::empty(RuleSet::Tak, 3);
  nearly.set(cell_index(3, 0, 0));
  nearly.set(cell_index(3, 1, 0));  // one move from a column win
  CHECK(solver.outcome(nearly) == Outcome::Win);
  CHECK_THROWS_AS(solver.mate_in(nearly), std::domain_error);
}

TEST_CASE("enumerated penults all have mate depth one") {
  GridSolver solver(RuleSet::Tak, 4);
  for (const Board& b : enumerate_penults(RuleSet::Tak, 4).classes) {
    CHECK(solver.outcome(b) == Outcome::Loss);
    CHECK(solver.mate_in(b) == 1);
  }
}

}  // TEST_SUITE
