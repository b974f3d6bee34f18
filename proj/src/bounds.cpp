#include "penult/bounds.hpp"

#include <stdexcept>

namespace penult {

namespace {

// weight of cell (r,c) inside the window, or 0 outside the plus shape
int window_weight(WindowKind w, int r, int c) {
  switch (w) {
    case WindowKind::Cross:
      return (r == 1 || c == 1) ? 1 : 0;
    case WindowKind::ThickCross:
      return ((r == 0 || r == 3) && (c == 0 || c == 3)) ? 0 : 1;
    case WindowKind::WeightedCross:
      if ((r == 0 || r == 4) && (c == 0 || c == 4)) return 0;
      if ((r == 2 && c >= 1 && c <= 3) || (c == 2 && r >= 1 && r <= 3)) return 2;
      return 1;
  }
  return 0;
}

}  // namespace

int window_side(WindowKind w) {
  switch (w) {
    case WindowKind::Cross: return 3;
    case WindowKind::ThickCross: return 4;
    case WindowKind::WeightedCross: return 5;
  }
  return 0;
}

int window_weight_sum(WindowKind w) {
  const int side = window_side(w);
  int sum = 0;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) sum += window_weight(w, r, c);
  return sum;
}

int window_min(const Board& b, WindowKind w) {
  if (b.game != RuleSet::Tak && b.game != RuleSet::Tic && b.game != RuleSet::DualTic)
    throw std::invalid_argument("window sums are defined on grid boards");
  const int side = window_side(w);
  const int n = b.n;
  if (n < side) throw std::invalid_argument("board too small for the window");
  int best = -1;
  for (int r0 = 0; r0 + side <= n; ++r0)
    for (int c0 = 0; c0 + side <= n; ++c0) {
      int sum = 0;
      for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
          if (b.test(cell_index(n, r0 + r, c0 + c))) sum += window_weight(w, r, c);
      if (best < 0 || sum < best) best = sum;
    }
  return best;
}

int tak_lower_bound(int n) {
  if (n < 4) throw std::invalid_argument("bound defined for n >= 4");
  if (n == 4) return 0;  // no 5x5 window fits
  const int num = 7 * (n - 4) * (n - 4);
  return (num + 25) / 26;
}

int tic_dual_upper_bound(int n) {
  if (n < 2) throw std::invalid_argument("bound defined for n >= 2");
  if (n == 2) return 4;
  if (n == 3) return 6;
  if (n == 4) return 9;
  return 4 * (n - 2);
}

int snake_upper_bound(int n) {
  if (n < 6) throw std::invalid_argument("snake bound defined for n >= 6");
  switch (n % 6) {
    case 1:
    case 4: return 2 * n + (n + 2) * (n - 4) / 3;
    case 2: return 2 * (n - 2) + n * (n - 2) / 3;
    case 3: return (n - 2) + (n - 1) + (n + 1) * (n - 3) / 3;
    case 5: return 2 * n + (n - 2) + (n + 2) * (n - 5) / 3;
    case 0: return 3 * (n - 2) + n * (n - 3) / 3;
  }
  return 0;
}

}  // namespace penult
