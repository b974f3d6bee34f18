#pragma once

#include "penult/board.hpp"

namespace penult {

// Sliding plus-shaped windows used by the Tak token-count bounds:
//   Cross         5-cell plus inside a 3x3 window, every cell weight 1
//   ThickCross    12-cell plus inside a 4x4 window (corners excluded)
//   WeightedCross 5x5 window, centre plus weight 2, corners 0, rest 1
enum class WindowKind { Cross, ThickCross, WeightedCross };

int window_side(WindowKind w);
int window_weight_sum(WindowKind w);  // 5, 12, 26

// Minimum weighted token sum over all placements of the window fully inside
// the board.  Throws std::invalid_argument if the board is too small.
int window_min(const Board& b, WindowKind w);

// ceil(7*(n-4)^2 / 26) in exact integer arithmetic; 0 when the window does
// not fit (n = 4).
int tak_lower_bound(int n);

// Largest possible penult on the n x n removal board: 4, 6, 9, then 4(n-2).
int tic_dual_upper_bound(int n);

// Exact token count of the snake construction for n >= 6 (six cases by
// n mod 6); an upper bound for the smallest Tak penult L(n).
int snake_upper_bound(int n);

}  // namespace penult
