#pragma once

#include <vector>

#include "penult/board.hpp"

namespace penult {

// Named penult families.  Every generator verifies its output with the
// classifier and throws std::runtime_error if the board is not a penult;
// domain violations throw std::invalid_argument.  Boards come out in their
// reference orientation (not canonicalized).

// Removal-game staircase families: A has 2n tokens (n>=3), B has 3(n-1)
// (n>=3), C has 4(n-2) (n>=4).
Board tic_dual_family(char family, int n);

// Sporadic families with 4n-m tokens, 9 <= m <= 13.  Domains: m=9 needs
// n>=5; m=10,11,12 need n>=6; m=13 needs n>=7.
Board tic_dual_D(int n, int m);

// Places p on rows/cols [0,k) and q on rows/cols [k,n) of an otherwise
// untouched board; both inputs must be DualTic penults.
Board tic_dual_compose(const Board& p, const Board& q);

// Tak penult with n^2-2n-k-l+4 tokens: a full board minus a ring of free
// cells with gaps of k (top row) and l (left column); 2 <= k,l <= n-2.
Board tak_variable_diamond(int n, int k, int l);

// Tak penult with (n-2)^2+2 (variant 1) or (n-2)^2+3 (variant 2) tokens:
// a full corner block plus a short diagonal tail; n >= 4.
Board tak_l_snake(int n, int variant);

// Near-minimal Tak penult built from vertical strips every third column with
// two-token diagonal staircases at their free ends; n >= 6.  Token count
// follows the six n-mod-6 cases (see snake_upper_bound).
Board tak_snake(int n);

// Reference dots-and-boxes penults: five boards on 3 dots covering 4..8
// tokens, seven boards on 4 dots covering 8..14.
std::vector<Board> db_fixtures(int dots);

namespace fixtures {

// Small reference positions used across tests and docs.
std::vector<Board> tak3_penults();        // both 3x3 classes
std::vector<Board> tak4_samples();        // 6-, 7- and 8-token examples
Board minimal_5x5_penult();               // the unique 10-token 5x5 board
std::vector<Board> mirror_loss_positions();  // where mirroring strategies fail

}  // namespace fixtures

}  // namespace penult
