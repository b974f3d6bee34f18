#include "penult/transform.hpp"

#include <bit>

namespace penult {

namespace {

// Every element factors as flips-after-optional-swap:
//   (r,c) -> swap? (c,r) : (r,c), then flip row / column coordinates.
struct Decomp {
  bool swap, flip_r, flip_c;
};

constexpr Decomp decomp_of(Transform t) {
  switch (t) {
    case Transform::Identity: return {false, false, false};
    case Transform::Rot90: return {true, false, true};
    case Transform::Rot180: return {false, true, true};
    case Transform::Rot270: return {true, true, false};
    case Transform::FlipCols: return {false, false, true};
    case Transform::FlipRows: return {false, true, false};
    case Transform::Transpose: return {true, false, false};
    case Transform::AntiTranspose: return {true, true, true};
  }
  return {false, false, false};
}

constexpr Transform from_decomp(bool swap, bool fr, bool fc) {
  for (Transform t : all_transforms) {
    const Decomp d = decomp_of(t);
    if (d.swap == swap && d.flip_r == fr && d.flip_c == fc) return t;
  }
  return Transform::Identity;
}

}  // namespace

std::pair<int, int> map_cell(Transform t, int n, int r, int c) {
  const Decomp d = decomp_of(t);
  if (d.swap) std::swap(r, c);
  if (d.flip_r) r = n - 1 - r;
  if (d.flip_c) c = n - 1 - c;
  return {r, c};
}

Transform compose(Transform outer, Transform inner) {
  const Decomp a = decomp_of(inner);
  const Decomp b = decomp_of(outer);
  // b(a(x)): the outer swap exchanges which coordinate the inner flips land on.
  const bool swap = a.swap != b.swap;
  bool fr = a.flip_r, fc = a.flip_c;
  if (b.swap) std::swap(fr, fc);
  fr = fr != b.flip_r;
  fc = fc != b.flip_c;
  return from_decomp(swap, fr, fc);
}

Transform inverse(Transform t) {
  for (Transform u : all_transforms)
    if (compose(u, t) == Transform::Identity) return u;
  return Transform::Identity;
}

int map_universe_index(Transform t, RuleSet game, int n, int idx) {
  if (game != RuleSet::DbAbbrev) {
    const auto [r, c] = map_cell(t, n, idx / n, idx % n);
    return cell_index(n, r, c);
  }
  // Map both endpoint dots, then read the image edge back off.
  const EdgeRef e = edge_of_index(n, idx);
  const int r2 = e.kind == 'h' ? e.r : e.r + 1;
  const int c2 = e.kind == 'h' ? e.c + 1 : e.c;
  auto [ar, ac] = map_cell(t, n, e.r, e.c);
  auto [br, bc] = map_cell(t, n, r2, c2);
  if (ar > br || (ar == br && ac > bc)) {
    std::swap(ar, br);
    std::swap(ac, bc);
  }
  if (ar == br) return h_edge_index(n, ar, ac);
  return v_edge_index(n, ar, ac);
}

Board apply_transform(const Board& b, Transform t) {
  Board out = Board::empty(b.game, b.n);
  const int u = b.universe();
  for (int w = 0; w < 8; ++w) {
    uint64_t bits = b.words[w];
    while (bits) {
      const int idx = (w << 6) + std::countr_zero(bits);
      bits &= bits - 1;
      if (idx >= u) break;
      out.set(map_universe_index(t, b.game, b.n, idx));
    }
  }
  return out;
}

Board canonical_form(const Board& b) {
  Board best = b;
  for (Transform t : all_transforms) {
    if (t == Transform::Identity) continue;
    Board img = apply_transform(b, t);
    if (mask_less(img, best)) best = img;
  }
  return best;
}

}  // namespace penult
