#include <doctest.h>

#include <random>

#include "penult/board.hpp"
#include "penult/constructions.hpp"
#include "penult/games.hpp"
#include "penult/transform.hpp"

using namespace penult;

namespace {

Board make(RuleSet game, int n, std::initializer_list<std::pair<int, int>> cells) {
  Board b = Board::empty(game, n);
  for (auto [r, c] : cells) b.set(cell_index(n, r, c));
  return b;
}

Board random_board(RuleSet game, int n, std::mt19937_64& rng, double density) {
  Board b = Board::empty(game, n);
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < b.universe(); ++i)
    if (coin(rng)) b.set(i);
  return b;
}

}  // namespace

TEST_SUITE("games") {

TEST_CASE("tak wins need an orthogonal crossing") {
  // the diagonal is not connected
  CHECK_FALSE(is_won(make(RuleSet::Tak, 3, {{0, 0}, {1, 1}, {2, 2}})));
  // a full column spans top to bottom
  CHECK(is_won(make(RuleSet::Tak, 4, {{0, 2}, {1, 2}, {2, 2}, {3, 2}})));
  // touching left+top and top+right must not chain into a left-right win
  CHECK_FALSE(is_won(make(RuleSet::Tak, 3, {{0, 0}, {0, 2}, {1, 1}, {2, 0}})));
  // an L-shaped road
  CHECK(is_won(make(RuleSet::Tak, 3, {{2, 0}, {2, 1}, {1, 1}, {0, 1}})));
}

TEST_CASE("tic and dualtic line predicates") {
  CHECK(is_won(make(RuleSet::Tic, 3, {{1, 0}, {1, 1}, {1, 2}})));
  CHECK_FALSE(is_won(make(RuleSet::Tic, 3, {{1, 0}, {1, 1}, {0, 2}})));
  // dualtic: won when a line has no tokens left
  CHECK(is_won(Board::empty(RuleSet::DualTic, 3)));
  Board d = complement(Board::empty(RuleSet::Tic, 3));  // full dual board
  CHECK_FALSE(is_won(d));
  d.reset(cell_index(3, 0, 0));
  d.reset(cell_index(3, 0, 1));
  d.reset(cell_index(3, 0, 2));
  CHECK(is_won(d));
}

TEST_CASE("db wins when a box is closed") {
  Board b = Board::empty(RuleSet::DbAbbrev, 3);
  b.set(h_edge_index(3, 0, 0));
  b.set(h_edge_index(3, 1, 0));
  b.set(v_edge_index(3, 0, 0));
  CHECK_FALSE(is_won(b));
  b.set(v_edge_index(3, 0, 1));
  CHECK(is_won(b));
}

TEST_CASE("sample penults are not won") {
  for (const Board& b : fixtures::tak4_samples()) CHECK_FALSE(is_won(b));
  CHECK_FALSE(is_won(fixtures::minimal_5x5_penult()));
}

TEST_CASE("legal moves") {
  CHECK(legal_moves(Board::empty(RuleSet::Tak, 2)).size() == 4);
  CHECK(legal_moves(Board::empty(RuleSet::DbAbbrev, 3)).size() == 2 * 3 * 2);
  // a finished game has no options
  const Board won = make(RuleSet::Tak, 3, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(legal_moves(won).empty());
  // dualtic moves remove tokens
  Board d = complement(Board::empty(RuleSet::Tic, 2));
  const auto moves = legal_moves(d);
  CHECK(moves.size() == 4);
  CHECK(token_count(apply_move(d, moves[0])) == 3);
}

TEST_CASE("classification of the smallest boards") {
  CHECK(classify(Board::empty(RuleSet::Tak, 2)) == Classification::Penult);
  CHECK(classify(Board::empty(RuleSet::Tak, 1)) == Classification::Ult);
  CHECK(classify(make(RuleSet::Tak, 1, {{0, 0}})) == Classification::Terminal);
  CHECK(classify(Board::empty(RuleSet::Tak, 3)) == Classification::Other);
}

TEST_CASE("the reference boards classify as penults") {
  for (const Board& b : fixtures::tak3_penults())
    CHECK(classify(b) == Classification::Penult);
  for (const Board& b : fixtures::tak4_samples())
    CHECK(classify(b) == Classification::Penult);
  CHECK(classify(fixtures::minimal_5x5_penult()) == Classification::Penult);
}

TEST_CASE("mirror-loss fixtures are one move from over") {
  const auto positions = fixtures::mirror_loss_positions();
  REQUIRE(positions.size() == 4);
  for (const Board& b : positions) {
    CHECK_FALSE(is_won(b));
    CHECK(classify(b) == Classification::Ult);
  }
}

TEST_CASE("win predicate is monotone along the play direction") {
  // exhaustive at n <= 3
  for (RuleSet game : {RuleSet::Tak, RuleSet::Tic, RuleSet::DualTic, RuleSet::DbAbbrev}) {
    for (int n = 2; n <= 3; ++n) {
      Board b = Board::empty(game, n);
      const int u = b.universe();
      for (uint64_t m = 0; m < (uint64_t{1} << u); ++m) {
        b.words[0] = m;
        if (!is_won(b)) continue;
        CHECK(legal_moves(b).empty());
        const bool removal = game == RuleSet::DualTic;
        for (int i = 0; i < u; ++i) {
          if (b.test(i) != removal) continue;
          CHECK(is_won(apply_move(b, i)));
        }
      }
    }
  }
  // sampled at n <= 6
  std::mt19937_64 rng(77);
  for (RuleSet game : {RuleSet::Tak, RuleSet::Tic, RuleSet::DualTic, RuleSet::DbAbbrev}) {
    for (int rep = 0; rep < 300; ++rep) {
      const int n = 4 + int(rng() % 3);
      const Board b = random_board(game, n, rng, 0.5);
      if (!is_won(b)) continue;
      const bool removal = game == RuleSet::DualTic;
      for (int i = 0; i < b.universe(); ++i)
        if (b.test(i) == removal) CHECK(is_won(apply_move(b, i)));
    }
  }
}

TEST_CASE("penult classification implies the two-ply structure") {
  std::mt19937_64 rng(101);
  int seen = 0;
  for (int rep = 0; rep < 4000 && seen < 25; ++rep) {
    const Board b = random_board(RuleSet::Tak, 3, rng, 0.3);
    if (classify(b) != Classification::Penult) continue;
    ++seen;
    CHECK_FALSE(is_won(b));
    for (int m : legal_moves(b)) {
      const Board option = apply_move(b, m);
      CHECK_FALSE(is_won(option));
      bool winning_reply = false;
      for (int m2 : legal_moves(option))
        if (is_won(apply_move(option, m2))) winning_reply = true;
      CHECK(winning_reply);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("tic/dualtic duality over every 4x4 position") {
  Board b = Board::empty(RuleSet::Tic, 4);
  int mismatches = 0;
  for (uint64_t m = 0; m < (uint64_t{1} << 16); ++m) {
    b.words[0] = m;
    if (classify(b) != classify(complement(b))) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("classification is isometry-invariant") {
  std::mt19937_64 rng(113);
  for (RuleSet game : {RuleSet::Tak, RuleSet::Tic, RuleSet::DualTic, RuleSet::DbAbbrev}) {
    for (int rep = 0; rep < 15; ++rep) {
      const Board b = random_board(game, 3, rng, 0.35);
      const Classification cls = classify(b);
      for (Transform t : all_transforms) CHECK(classify(apply_transform(b, t)) == cls);
    }
  }
}

}  // TEST_SUITE
