#pragma once

#include <array>
#include <utility>

#include "penult/board.hpp"

namespace penult {

// The eight symmetries of the square.  Rot90 is the clockwise quarter turn
// (r,c) -> (c, n-1-r); FlipCols is the column flip (r,c) -> (r, n-1-c).
enum class Transform : uint8_t {
  Identity,
  Rot90,
  Rot180,
  Rot270,
  FlipCols,
  FlipRows,
  Transpose,
  AntiTranspose,
};

inline constexpr std::array<Transform, 8> all_transforms = {
    Transform::Identity,  Transform::Rot90,    Transform::Rot180,
    Transform::Rot270,    Transform::FlipCols, Transform::FlipRows,
    Transform::Transpose, Transform::AntiTranspose,
};

std::pair<int, int> map_cell(Transform t, int n, int r, int c);
int map_universe_index(Transform t, RuleSet game, int n, int idx);

Transform compose(Transform outer, Transform inner);  // outer after inner
Transform inverse(Transform t);

Board apply_transform(const Board& b, Transform t);

// Row-major lexicographic minimum over the eight images.
Board canonical_form(const Board& b);

}  // namespace penult
