#pragma once

#include <vector>

#include "penult/board.hpp"

namespace penult {

enum class Classification : uint8_t { Terminal, Ult, Penult, Other };
const char* classification_name(Classification c);

// Win predicates:
//   Tak      - an orthogonally connected occupied set touches both left and
//              right edges, or both top and bottom edges.
//   Tic      - some row or column is fully occupied.
//   DualTic  - some row or column has no tokens left.
//   DbAbbrev - some unit box has all four edges taken.
bool is_won(const Board& b);

// Empty iff the game is over.  Placement games move on free indices; DualTic
// moves remove a remaining token, so its moves are the occupied indices.
std::vector<int> legal_moves(const Board& b);
Board apply_move(const Board& b, int idx);

// Terminal: no options.  Ult: non-terminal with a terminal option.  Penult:
// non-terminal and every option is an ult.  Other: anything else.
Classification classify(const Board& b);

}  // namespace penult
