#include "penult/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "penult/fastboard.hpp"

namespace penult {

namespace {

// Static per-(game,n) search data beyond the FastGame tables.
struct SearchTables {
  const FastGame* fg = nullptr;
  int universe = 0;
  // grids: row/col of each cell, and whether the cell completes its row/col
  std::array<int8_t, 64> row{}, col{};
  std::array<bool, 64> last_in_row{}, last_in_col{};
  // Tak: sliding windows with proved token minima (plus >= 1, thick plus
  // >= 3, weighted plus >= 7).  A branch dies as soon as the occupied weight
  // plus the undecided weight of some window drops below its threshold.
  struct WindowRef {
    int16_t id;
    int8_t weight;
  };
  int window_count = 0;
  std::vector<int8_t> window_threshold;
  std::vector<int8_t> window_max_weight;  // largest single-cell weight
  std::vector<int16_t> window_total;      // full weight of the window
  std::array<std::vector<WindowRef>, 64> windows_of;

  void add_window(int n, int r0, int c0, int side, const int* weights, int threshold) {
    const int id = window_count++;
    window_threshold.push_back(static_cast<int8_t>(threshold));
    int total = 0, maxw = 0;
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c) {
        const int w = weights[r * side + c];
        if (w == 0) continue;
        total += w;
        maxw = std::max(maxw, w);
        windows_of[cell_index(n, r0 + r, c0 + c)].push_back(
            {static_cast<int16_t>(id), static_cast<int8_t>(w)});
      }
    window_total.push_back(static_cast<int16_t>(total));
    window_max_weight.push_back(static_cast<int8_t>(maxw));
  }

  explicit SearchTables(const FastGame& fast) : fg(&fast), universe(fast.universe) {
    const int n = fast.n;
    if (fast.game != RuleSet::DbAbbrev) {
      for (int i = 0; i < universe; ++i) {
        row[i] = static_cast<int8_t>(i / n);
        col[i] = static_cast<int8_t>(i % n);
        last_in_row[i] = col[i] == n - 1;
        last_in_col[i] = row[i] == n - 1;
      }
      if (fast.game == RuleSet::Tak) {
        static constexpr int kPlus[9] = {0, 1, 0, 1, 1, 1, 0, 1, 0};
        static constexpr int kThick[16] = {0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0};
        static constexpr int kWeighted[25] = {0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 2, 2,
                                              2, 1, 1, 1, 2, 1, 1, 0, 1, 1, 1, 0};
        for (int r = 0; r + 3 <= n; ++r)
          for (int c = 0; c + 3 <= n; ++c) add_window(n, r, c, 3, kPlus, 1);
        for (int r = 0; r + 4 <= n; ++r)
          for (int c = 0; c + 4 <= n; ++c) add_window(n, r, c, 4, kThick, 3);
        for (int r = 0; r + 5 <= n; ++r)
          for (int c = 0; c + 5 <= n; ++c) add_window(n, r, c, 5, kWeighted, 7);
      }
    }
  }
};

// Union-find with an undo log, maintained along the DFS path (Tak only).
struct RollbackDsu {
  std::array<int8_t, 64> parent{};
  std::array<int16_t, 64> size{};
  std::array<uint8_t, 64> flag{};
  struct Merge {
    int8_t child, parent_root;
    uint8_t old_flag;
  };
  std::vector<Merge> log;

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void make(int i, uint8_t touch) {
    parent[i] = static_cast<int8_t>(i);
    size[i] = 1;
    flag[i] = touch;
  }

  // Returns the new root.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size[a] > size[b]) std::swap(a, b);
    log.push_back({static_cast<int8_t>(a), static_cast<int8_t>(b), flag[b]});
    parent[a] = static_cast<int8_t>(b);
    size[b] = static_cast<int16_t>(size[b] + size[a]);
    flag[b] |= flag[a];
    return b;
  }

  void rollback(size_t mark) {
    while (log.size() > mark) {
      const Merge m = log.back();
      log.pop_back();
      parent[m.child] = m.child;
      size[m.parent_root] = static_cast<int16_t>(size[m.parent_root] - size[m.child]);
      flag[m.parent_root] = m.old_flag;
    }
  }
};

constexpr bool covers(uint8_t f) { return (f & 3) == 3 || (f & 12) == 12; }

struct Shared {
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  uint64_t budget = 0;
  int max_tokens = 0;

  std::mutex mu;
  std::unordered_set<uint64_t> classes;
  std::vector<std::vector<uint64_t>> pending;  // per prefix, discovery order
  std::vector<bool> done;
  uint64_t frontier = 0;  // next prefix whose completion has not been published
  std::atomic<uint64_t> next_prefix{0};
  const EnumOptions* opts = nullptr;
};

class Searcher {
 public:
  Searcher(const FastGame& fg, const SearchTables& tab, Shared& shared)
      : fg_(fg), tab_(tab), shared_(shared) {
    win_occ_.assign(tab.window_count, 0);
    win_und_.assign(tab.window_total.begin(), tab.window_total.end());
  }

  // Runs prefixes pulled from the shared counter until exhausted or stopped.
  void run(int prefix_bits) {
    const uint64_t prefix_count = uint64_t{1} << prefix_bits;
    for (;;) {
      const uint64_t p = shared_.next_prefix.fetch_add(1);
      if (p >= prefix_count || shared_.stop.load(std::memory_order_relaxed)) break;
      found_.clear();
      seen_.clear();
      if (apply_prefix(p, prefix_bits)) dfs(prefix_bits);
      unwind_prefix();
      publish(p);
      if (shared_.stop.load(std::memory_order_relaxed)) break;
    }
    flush_nodes();
  }

 private:
  bool apply_prefix(uint64_t p, int bits) {
    applied_ = 0;
    for (int i = 0; i < bits; ++i) {
      ++applied_;  // count before the check so a failed decision is unwound too
      if (!decide(i, (p >> i) & 1)) return false;
    }
    return true;
  }

  void unwind_prefix() {
    for (int i = applied_ - 1; i >= 0; --i) undo(i);
  }

  void dfs(int idx) {
    if (++local_nodes_ >= 8192) flush_nodes();
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    if (idx == tab_.universe) {
      if (fg_.is_penult(occ_)) {
        const uint64_t canon = fg_.canonical64(occ_);
        if (seen_.insert(canon).second) found_.push_back(canon);
      }
      return;
    }
    for (int bit = 1; bit >= 0; --bit) {
      if (decide(idx, bit)) dfs(idx + 1);
      undo(idx);
    }
  }

  // Applies the decision for cell `idx`; returns false when the subtree
  // provably contains no penult.  Bookkeeping is always applied in full so
  // that undo() stays symmetric; callers must undo() either way.
  bool decide(int idx, bool occupied) {
    dsu_mark_[idx] = dsu_.log.size();
    took_[idx] = occupied;
    bool alive = true;
    if (occupied && shared_.max_tokens > 0 && ++total_occ_ > shared_.max_tokens)
      alive = false;
    if (fg_.game == RuleSet::Tak) {
      // window potentials move on both branches; with a token cap, a window
      // can also receive at most max-weight tokens per remaining placement
      const int rem = shared_.max_tokens > 0 ? shared_.max_tokens - total_occ_ : 1 << 14;
      for (const SearchTables::WindowRef ref : tab_.windows_of[idx]) {
        win_und_[ref.id] = static_cast<int16_t>(win_und_[ref.id] - ref.weight);
        if (occupied) win_occ_[ref.id] = static_cast<int16_t>(win_occ_[ref.id] + ref.weight);
        const int supply =
            std::min<int>(win_und_[ref.id], tab_.window_max_weight[ref.id] * rem);
        if (win_occ_[ref.id] + supply < tab_.window_threshold[ref.id]) alive = false;
      }
    }
    if (occupied) {
      occ_ |= uint64_t{1} << idx;
      switch (fg_.game) {
        case RuleSet::Tak: {
          const int r = tab_.row[idx], c = tab_.col[idx];
          // every row and column of a penult misses at least two cells
          if (++row_occ_[r] > fg_.n - 2) alive = false;
          if (++col_occ_[c] > fg_.n - 2) alive = false;
          dsu_.make(idx, fg_.edge_touch[idx]);
          int root = idx;
          uint64_t nb = fg_.adjacent[idx] & occ_ & ~(uint64_t{1} << idx);
          while (nb) {
            const int j = std::countr_zero(nb);
            nb &= nb - 1;
            root = dsu_.unite(root, j);
          }
          if (covers(dsu_.flag[root])) alive = false;  // prefix already won
          break;
        }
        case RuleSet::Tic: {
          // a completed line would end the game; one short hands over the win
          for (int8_t t : fg_.targets_of[idx]) {
            if (t < 0) break;
            if (++tgt_occ_[t] > std::popcount(fg_.targets[t]) - 2) alive = false;
          }
          break;
        }
        case RuleSet::DualTic: {
          int filled = 0;
          for (int8_t t : fg_.targets_of[idx]) {
            if (t < 0) break;
            if (++tgt_occ_[t] >= 3) ++filled;
          }
          // a token whose row and column both reach three tokens can never
          // be part of a penult
          if (filled == 2) alive = false;
          break;
        }
        case RuleSet::DbAbbrev: {
          for (int8_t t : fg_.targets_of[idx]) {
            if (t < 0) break;
            if (++tgt_occ_[t] >= 3) alive = false;
          }
          break;
        }
      }
    }
    if (!alive) return false;
    // checks that fire once a row or column is fully decided; boxes carry no
    // lower bound (a penult may leave a box empty)
    if (fg_.game == RuleSet::DualTic) {
      if (tab_.last_in_row[idx] && tgt_occ_[tab_.row[idx]] < 2) return false;
      if (tab_.last_in_col[idx] && tgt_occ_[fg_.n + tab_.col[idx]] < 2) return false;
    }
    // column-flip reduction: boards whose top row reads larger than its
    // reversal are mirror images of boards explored under the smaller
    // prefix, so the class set is unaffected by skipping them
    if (fg_.game != RuleSet::DbAbbrev && idx == fg_.n - 1) {
      const uint64_t row0 = occ_ & ((uint64_t{1} << fg_.n) - 1);
      uint64_t rev = 0;
      for (int c = 0; c < fg_.n; ++c)
        if ((row0 >> c) & 1) rev |= uint64_t{1} << (fg_.n - 1 - c);
      if (rev < row0) return false;
    }
    return true;
  }

  void undo(int idx) {
    if (took_[idx] && shared_.max_tokens > 0) --total_occ_;
    if (fg_.game == RuleSet::Tak) {
      for (const SearchTables::WindowRef ref : tab_.windows_of[idx]) {
        win_und_[ref.id] = static_cast<int16_t>(win_und_[ref.id] + ref.weight);
        if (took_[idx]) win_occ_[ref.id] = static_cast<int16_t>(win_occ_[ref.id] - ref.weight);
      }
    }
    if (took_[idx]) {
      occ_ &= ~(uint64_t{1} << idx);
      switch (fg_.game) {
        case RuleSet::Tak:
          --row_occ_[tab_.row[idx]];
          --col_occ_[tab_.col[idx]];
          dsu_.rollback(dsu_mark_[idx]);
          break;
        default:
          for (int8_t t : fg_.targets_of[idx]) {
            if (t < 0) break;
            --tgt_occ_[t];
          }
          break;
      }
    }
  }

  void flush_nodes() {
    const uint64_t total =
        shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (total > shared_.budget) shared_.stop.store(true, std::memory_order_relaxed);
  }

  void publish(uint64_t p) {
    std::scoped_lock lock(shared_.mu);
    shared_.pending[p] = std::move(found_);
    shared_.done[p] = true;
    const uint64_t before = shared_.frontier;
    std::vector<uint64_t> fresh;
    while (shared_.frontier < shared_.done.size() && shared_.done[shared_.frontier]) {
      for (uint64_t canon : shared_.pending[shared_.frontier])
        if (shared_.classes.insert(canon).second) fresh.push_back(canon);
      shared_.pending[shared_.frontier].clear();
      ++shared_.frontier;
    }
    if (shared_.opts->on_progress && shared_.frontier != before)
      shared_.opts->on_progress(shared_.frontier, shared_.classes.size(), fresh);
  }

  const FastGame& fg_;
  const SearchTables& tab_;
  Shared& shared_;
  uint64_t occ_ = 0;
  std::array<int, 18> row_occ_{}, col_occ_{};
  std::array<int, 40> tgt_occ_{};
  std::vector<int16_t> win_occ_, win_und_;
  int total_occ_ = 0;
  std::array<bool, 64> took_{};
  std::array<size_t, 64> dsu_mark_{};
  RollbackDsu dsu_;
  int applied_ = 0;
  uint64_t local_nodes_ = 0;
  std::unordered_set<uint64_t> seen_;
  std::vector<uint64_t> found_;
};

}  // namespace

EnumResult enumerate_penults(RuleSet game, int n, const EnumOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const FastGame& fg = fast_game(game, n);
  if (fg.universe < 1) throw std::invalid_argument("degenerate universe");
  static std::mutex tab_mu;
  static std::map<std::pair<int, int>, SearchTables> tab_cache;
  const SearchTables* tab;
  {
    std::scoped_lock lock(tab_mu);
    auto [it, inserted] = tab_cache.try_emplace({static_cast<int>(game), n}, fg);
    tab = &it->second;
  }

  const int prefix_bits = std::clamp(opts.prefix_depth, 0, std::min(fg.universe, 20));
  Shared shared;
  shared.budget = opts.node_budget;
  shared.max_tokens = opts.max_tokens;
  shared.opts = &opts;
  shared.pending.resize(uint64_t{1} << prefix_bits);
  shared.done.assign(uint64_t{1} << prefix_bits, false);
  shared.next_prefix = opts.resume_from_prefix;
  shared.frontier = opts.resume_from_prefix;
  for (uint64_t p = 0; p < opts.resume_from_prefix && p < shared.done.size(); ++p)
    shared.done[p] = true;
  if (opts.seed_classes)
    shared.classes.insert(opts.seed_classes->begin(), opts.seed_classes->end());

  int workers = opts.workers > 0 ? opts.workers
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1) {
    Searcher(fg, *tab, shared).run(prefix_bits);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] { Searcher(fg, *tab, shared).run(prefix_bits); });
    for (auto& t : pool) t.join();
  }

  EnumResult result;
  result.complete = !shared.stop.load();
  result.nodes = shared.nodes.load();
  result.prefix_depth = prefix_bits;
  std::vector<uint64_t> masks(shared.classes.begin(), shared.classes.end());
  std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    const int ta = std::popcount(a), tb = std::popcount(b);
    if (ta != tb) return ta < tb;
    return FastGame::lex_less(a, b);
  });
  result.classes.reserve(masks.size());
  for (uint64_t m : masks) result.classes.push_back(fg.board(m));
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Spectrum spectrum_of(RuleSet game, int n, const std::vector<Board>& classes) {
  Spectrum s;
  s.game = game;
  s.n = n;
  for (const Board& b : classes) {
    const int t = token_count(b);
    ++s.classes[t];
    s.representatives[t].push_back(b);
  }
  return s;
}

Spectrum spectrum(RuleSet game, int n, const EnumOptions& opts) {
  const EnumResult r = enumerate_penults(game, n, opts);
  Spectrum s = spectrum_of(game, n, r.classes);
  s.complete = r.complete;
  return s;
}

std::pair<int, int> extremes(RuleSet game, int n, const EnumOptions& opts) {
  const Spectrum s = spectrum(game, n, opts);
  if (s.classes.empty()) throw std::domain_error("no penults at this size");
  return {s.classes.begin()->first, s.classes.rbegin()->first};
}

bool is_interval(const Spectrum& s) {
  if (s.classes.empty()) return true;
  int expected = s.classes.begin()->first;
  for (const auto& [tokens, count] : s.classes) {
    if (tokens != expected) return false;
    ++expected;
  }
  return true;
}

}  // namespace penult
