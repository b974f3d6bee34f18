#include "penult/constructions.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>

#include "penult/games.hpp"

namespace penult {

namespace {

Board grid_board(RuleSet game, int n, std::initializer_list<std::pair<int, int>> cells) {
  Board b = Board::empty(game, n);
  for (auto [r, c] : cells) b.set(cell_index(n, r, c));
  return b;
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

Board checked(Board b, const char* family) {
  if (classify(b) != Classification::Penult)
    throw std::runtime_error(std::string(family) + ": generated board failed the penult check");
  return b;
}

void fill_rect(Board& b, int r0, int r1, int c0, int c1) {
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) b.set(cell_index(b.n, r, c));
}

}  // namespace

Board tic_dual_family(char family, int n) {
  Board b = Board::empty(RuleSet::DualTic, n);
  switch (family) {
    case 'a':
    case 'A': {
      require(n >= 3, "family A needs n >= 3");
      // two tokens per column, stepping down one row per column and wrapping
      for (int j = 0; j + 1 < n; ++j) {
        b.set(cell_index(n, j, j));
        b.set(cell_index(n, j + 1, j));
      }
      b.set(cell_index(n, n - 1, n - 1));
      b.set(cell_index(n, 0, n - 1));
      return checked(std::move(b), "family A");
    }
    case 'b':
    case 'B': {
      require(n >= 3, "family B needs n >= 3");
      for (int i = 1; i < n; ++i) {
        b.set(cell_index(n, i, 0));  // left column
        b.set(cell_index(n, 0, i));  // top row
        b.set(cell_index(n, i, i));  // diagonal
      }
      return checked(std::move(b), "family B");
    }
    case 'c':
    case 'C': {
      require(n >= 4, "family C needs n >= 4");
      fill_rect(b, 2, n - 1, 0, 1);
      fill_rect(b, 0, 1, 2, n - 1);
      return checked(std::move(b), "family C");
    }
    default:
      throw std::invalid_argument("unknown family (expected a, b or c)");
  }
}

Board tic_dual_D(int n, int m) {
  Board b = Board::empty(RuleSet::DualTic, n);
  switch (m) {
    case 9: {
      require(n >= 5, "D(9) needs n >= 5");
      fill_rect(b, 3, n - 1, 1, 2);
      fill_rect(b, 1, 2, 3, n - 1);
      b.set(cell_index(n, 0, 0));
      b.set(cell_index(n, 1, 0));
      b.set(cell_index(n, 0, 1));
      break;
    }
    case 10: {
      require(n >= 6, "D(10) needs n >= 6");
      fill_rect(b, 3, n - 1, 2, 3);
      fill_rect(b, 1, 2, 4, n - 1);
      fill_rect(b, 0, 1, 0, 1);
      break;
    }
    case 11: {
      require(n >= 6, "D(11) needs n >= 6");
      fill_rect(b, 4, n - 1, 2, 3);
      fill_rect(b, 2, 3, 4, n - 1);
      b.set(cell_index(n, 0, 0));
      b.set(cell_index(n, 1, 0));
      b.set(cell_index(n, 0, 1));
      b.set(cell_index(n, 2, 1));
      b.set(cell_index(n, 1, 2));
      break;
    }
    case 12: {
      require(n >= 6, "D(12) needs n >= 6");
      fill_rect(b, 4, n - 1, 2, 3);
      fill_rect(b, 2, 3, 4, n - 1);
      fill_rect(b, 0, 1, 0, 1);
      break;
    }
    case 13: {
      require(n >= 7, "D(13) needs n >= 7");
      fill_rect(b, 5, n - 1, 3, 4);
      fill_rect(b, 3, 4, 5, n - 1);
      fill_rect(b, 0, 1, 0, 1);
      b.set(cell_index(n, 2, 2));
      b.set(cell_index(n, 2, 3));
      b.set(cell_index(n, 3, 2));
      break;
    }
    default:
      throw std::invalid_argument("D families take 9 <= m <= 13");
  }
  return checked(std::move(b), "family D");
}

Board tic_dual_compose(const Board& p, const Board& q) {
  require(p.game == RuleSet::DualTic && q.game == RuleSet::DualTic,
          "compose takes dualtic boards");
  if (classify(p) != Classification::Penult || classify(q) != Classification::Penult)
    throw std::invalid_argument("compose takes penults");
  const int k = p.n, n = p.n + q.n;
  if (n > max_side(RuleSet::DualTic)) throw std::invalid_argument("composed board too large");
  Board b = Board::empty(RuleSet::DualTic, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      if (p.test(cell_index(k, r, c))) b.set(cell_index(n, r, c));
  for (int r = 0; r < q.n; ++r)
    for (int c = 0; c < q.n; ++c)
      if (q.test(cell_index(q.n, r, c))) b.set(cell_index(n, k + r, k + c));
  return checked(std::move(b), "compose");
}

Board tak_variable_diamond(int n, int k, int l) {
  require(n >= 4, "variable diamond needs n >= 4");
  require(k >= 2 && k <= n - 2, "k out of [2, n-2]");
  require(l >= 2 && l <= n - 2, "l out of [2, n-2]");
  Board b = Board::empty(RuleSet::Tak, n);
  fill_rect(b, 0, n - 1, 0, n - 1);
  // the free cells form a closed ring: gaps in the top row and left column
  // joined by diagonal staircases onto the right column and bottom row
  for (int c = 1; c <= k; ++c) b.reset(cell_index(n, 0, c));
  for (int r = 1; r <= l; ++r) b.reset(cell_index(n, r, 0));
  for (int i = 1; i <= n - 1 - k; ++i) b.reset(cell_index(n, i, k + i));
  for (int r = n - 1 - k; r <= n - 2; ++r) b.reset(cell_index(n, r, n - 1));
  for (int i = 1; i <= n - 1 - l; ++i) b.reset(cell_index(n, l + i, i));
  for (int c = n - 1 - l; c <= n - 2; ++c) b.reset(cell_index(n, n - 1, c));
  return checked(std::move(b), "variable diamond");
}

Board tak_l_snake(int n, int variant) {
  require(n >= 4, "l-snake needs n >= 4");
  require(variant == 1 || variant == 2, "l-snake variant is 1 or 2");
  Board b = Board::empty(RuleSet::Tak, n);
  fill_rect(b, 2, n - 1, 0, n - 3);  // (n-2) x (n-2) corner block
  if (variant == 1) {
    b.set(cell_index(n, 1, n - 2));
    b.set(cell_index(n, 0, n - 1));
  } else {
    b.set(cell_index(n, 1, n - 1));
    b.set(cell_index(n, 0, n - 2));
    b.set(cell_index(n, 0, n - 1));
  }
  return checked(std::move(b), "l-snake");
}

namespace {

// Helpers for the snake family: a two-token diagonal staircase leaving the
// end of a vertical strip, and the strips themselves.
void stair(Board& b, int r, int c, int dr, int dc) {
  b.set(cell_index(b.n, r + dr, c + dc));
  b.set(cell_index(b.n, r + 2 * dr, c + 2 * dc));
}

void strip(Board& b, int c, int r0, int r1) { fill_rect(b, r0, r1, c, c); }

}  // namespace

Board tak_snake(int n) {
  require(n >= 6, "snake needs n >= 6");
  require(n <= max_side(RuleSet::Tak), "snake board too large");
  Board b = Board::empty(RuleSet::Tak, n);
  switch (n % 6) {
    case 1:
    case 4:
      // strips on every third column, alternating anchor; no boundary rows
      for (int c = 0; c < n; c += 3) {
        const bool top = c % 6 == 0;  // rows [0, n-3] else [2, n-1]
        strip(b, c, top ? 0 : 2, top ? n - 3 : n - 1);
        const int end = top ? n - 3 : 2;
        const int dr = top ? 1 : -1;
        if (c > 0) stair(b, end, c, dr, -1);
        if (c < n - 1) stair(b, end, c, dr, +1);
      }
      break;
    case 2:
      // boundary rows at top (cols 2..n-1) and bottom (cols 0..n-3)
      fill_rect(b, 0, 0, 2, n - 1);
      fill_rect(b, n - 1, n - 1, 0, n - 3);
      for (int c = 2; c <= n - 3; c += 3) {
        const bool top = c % 6 == 2;  // hangs from the top row
        strip(b, c, top ? 1 : 3, top ? n - 4 : n - 2);
        const int end = top ? n - 4 : 3;
        const int dr = top ? 1 : -1;
        stair(b, end, c, dr, -1);
        stair(b, end, c, dr, +1);
      }
      break;
    case 5:
      // like the 2-case rotated: boundary columns, with a doubled wall at
      // the left edge
      strip(b, 0, 2, n - 1);
      for (int c = 1; c < n; c += 3) {
        const bool bottom = c % 6 == 1;  // rests on the bottom edge
        strip(b, c, bottom ? 2 : 0, bottom ? n - 1 : n - 3);
        const int end = bottom ? 2 : n - 3;
        const int dr = bottom ? -1 : 1;
        if (c > 1) stair(b, end, c, dr, -1);
        if (c < n - 1) stair(b, end, c, dr, +1);
      }
      break;
    case 3:
      // bottom boundary row; strips alternate between touching the top edge
      // and resting on the bottom row
      fill_rect(b, n - 1, n - 1, 0, n - 3);
      for (int c = 0; c <= n - 3; c += 3) {
        const bool low = c % 6 == 0;  // connected to the bottom row
        strip(b, c, low ? 2 : 0, low ? n - 2 : n - 4);
        const int end = low ? 2 : n - 4;
        const int dr = low ? -1 : 1;
        if (c > 0) stair(b, end, c, dr, -1);
        stair(b, end, c, dr, +1);
      }
      break;
    case 0:
      // boundary rows top and bottom over cols 0..n-3; interior strips
      fill_rect(b, 0, 0, 0, n - 3);
      fill_rect(b, n - 1, n - 1, 0, n - 3);
      for (int c = 0; c <= n - 3; c += 3) {
        const bool top = c % 6 == 0;  // hangs from the top row
        strip(b, c, top ? 1 : 3, top ? n - 4 : n - 2);
        const int end = top ? n - 4 : 3;
        const int dr = top ? 1 : -1;
        if (c > 0) stair(b, end, c, dr, -1);
        stair(b, end, c, dr, +1);
      }
      break;
  }
  return checked(std::move(b), "snake");
}

namespace {

Board db_board(int dots, std::initializer_list<std::tuple<char, int, int>> edges) {
  Board b = Board::empty(RuleSet::DbAbbrev, dots);
  for (auto [kind, r, c] : edges)
    b.set(kind == 'h' ? h_edge_index(dots, r, c) : v_edge_index(dots, r, c));
  return b;
}

}  // namespace

std::vector<Board> db_fixtures(int dots) {
  require(dots == 3 || dots == 4, "db fixtures exist for 3 and 4 dots");
  std::vector<Board> out;
  if (dots == 3) {
    out.push_back(db_board(3, {{'h', 1, 0}, {'h', 1, 1}, {'v', 1, 1}, {'v', 0, 1}}));
    out.push_back(db_board(3, {{'h', 1, 0}, {'h', 1, 1}, {'v', 1, 1}, {'h', 0, 1}, {'h', 0, 0}}));
    out.push_back(db_board(
        3, {{'h', 1, 0}, {'h', 1, 1}, {'h', 2, 0}, {'h', 2, 1}, {'h', 0, 0}, {'h', 0, 1}}));
    out.push_back(db_board(3, {{'h', 1, 0},
                               {'v', 1, 2},
                               {'v', 0, 2},
                               {'h', 2, 0},
                               {'h', 2, 1},
                               {'h', 0, 1},
                               {'h', 0, 0}}));
    out.push_back(db_board(3, {{'v', 1, 0},
                               {'v', 0, 0},
                               {'v', 1, 2},
                               {'v', 0, 2},
                               {'h', 2, 0},
                               {'h', 2, 1},
                               {'h', 0, 1},
                               {'h', 0, 0}}));
  } else {
    out.push_back(db_board(4, {{'h', 2, 0},
                               {'v', 2, 1},
                               {'v', 2, 2},
                               {'h', 2, 2},
                               {'h', 1, 0},
                               {'v', 0, 1},
                               {'v', 0, 2},
                               {'h', 1, 2}}));
    out.push_back(db_board(4, {{'h', 2, 0},
                               {'v', 2, 1},
                               {'v', 2, 2},
                               {'h', 2, 2},
                               {'h', 1, 0},
                               {'v', 0, 1},
                               {'v', 0, 2},
                               {'v', 0, 3},
                               {'v', 1, 3}}));
    out.push_back(db_board(4, {{'h', 2, 0},
                               {'v', 2, 1},
                               {'v', 2, 2},
                               {'v', 2, 3},
                               {'v', 1, 2},
                               {'h', 1, 0},
                               {'v', 0, 1},
                               {'v', 0, 2},
                               {'v', 0, 3},
                               {'v', 1, 3}}));
    out.push_back(db_board(4, {{'v', 1, 1},
                               {'v', 2, 0},
                               {'v', 2, 1},
                               {'v', 2, 2},
                               {'v', 2, 3},
                               {'v', 1, 2},
                               {'h', 1, 0},
                               {'v', 0, 1},
                               {'v', 0, 2},
                               {'v', 0, 3},
                               {'v', 1, 3}}));
    out.push_back(db_board(4, {{'v', 1, 1},
                               {'v', 2, 0},
                               {'v', 2, 1},
                               {'v', 2, 2},
                               {'v', 2, 3},
                               {'v', 1, 2},
                               {'v', 0, 0},
                               {'v', 1, 0},
                               {'v', 0, 1},
                               {'v', 0, 2},
                               {'v', 0, 3},
                               {'v', 1, 3}}));
    out.push_back(db_board(4, {{'v', 1, 1},
                               {'v', 2, 0},
                               {'h', 3, 0},
                               {'h', 3, 1},
                               {'h', 3, 2},
                               {'v', 2, 3},
                               {'v', 1, 2},
                               {'v', 0, 0},
                               {'v', 1, 0},
                               {'v', 0, 1},
                               {'v', 0, 2},
                               {'v', 0, 3},
                               {'v', 1, 3}}));
    out.push_back(db_board(4, {{'v', 1, 1},
                               {'v', 2, 0},
                               {'h', 3, 0},
                               {'h', 3, 1},
                               {'h', 3, 2},
                               {'v', 2, 3},
                               {'v', 1, 2},
                               {'v', 0, 0},
                               {'v', 1, 0},
                               {'h', 0, 0},
                               {'h', 0, 1},
                               {'h', 0, 2},
                               {'v', 0, 3},
                               {'v', 1, 3}}));
  }
  for (const Board& b : out)
    if (classify(b) != Classification::Penult)
      throw std::runtime_error("db fixture failed the penult check");
  return out;
}

namespace fixtures {

std::vector<Board> tak3_penults() {
  return {grid_board(RuleSet::Tak, 3, {{2, 0}, {1, 1}, {0, 2}}),
          grid_board(RuleSet::Tak, 3, {{2, 0}, {0, 1}, {1, 2}})};
}

std::vector<Board> tak4_samples() {
  return {
      grid_board(RuleSet::Tak, 4, {{1, 0}, {0, 0}, {1, 2}, {0, 2}, {3, 1}, {3, 3}}),
      grid_board(RuleSet::Tak, 4, {{1, 0}, {0, 0}, {1, 1}, {0, 1}, {3, 2}, {3, 3}, {2, 3}}),
      grid_board(RuleSet::Tak, 4,
                 {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {0, 0}, {0, 3}, {3, 0}, {3, 3}}),
  };
}

Board minimal_5x5_penult() {
  return grid_board(RuleSet::Tak, 5,
                    {{0, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 3}, {2, 3}, {3, 0}, {4, 0}, {4, 2},
                     {4, 4}});
}

std::vector<Board> mirror_loss_positions() {
  return {
      // 4x4: the origin-mirroring second player is about to lose
      grid_board(RuleSet::Tak, 4, {{3, 1}, {2, 1}, {1, 2}, {0, 2}}),
      // 5x5: the line-mirroring first player is about to lose
      grid_board(RuleSet::Tak, 5, {{4, 0}, {3, 0}, {2, 2}, {1, 0}, {0, 0}}),
      // 7x7: the origin-mirroring first player is about to lose
      grid_board(RuleSet::Tak, 7,
                 {{3, 3}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 5}, {6, 2}, {4, 1}, {4, 5},
                  {2, 5}, {2, 1}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 4}}),
      // 7x7: the diagonal-mirroring first player is about to lose
      grid_board(RuleSet::Tak, 7,
                 {{3, 3}, {6, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {4, 5}, {3, 5},
                  {2, 5}, {1, 5}, {0, 5}, {0, 6}}),
  };
}

}  // namespace fixtures

}  // namespace penult
