// penult: command-line surface for the positional-game engine.
//
// Exit codes: 0 success; 1 a verification command found a violation (or a
// construction failed its own check); 2 invalid input; 3 search budget
// exhausted before completion.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "penult/board.hpp"
#include "penult/bounds.hpp"
#include "penult/constructions.hpp"
#include "penult/enumeration.hpp"
#include "penult/fastboard.hpp"
#include "penult/games.hpp"
#include "penult/render.hpp"
#include "penult/solver.hpp"
#include "penult/strategy.hpp"
#include "penult/transform.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

// ---- advisory result cache ----

std::optional<fs::path> cache_root() {
  if (const char* dir = std::getenv("PENULT_CACHE_DIR")) {
    if (*dir == '\0') return std::nullopt;  // explicitly disabled
    return fs::path(dir);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return fs::path(xdg) / "penult";
  if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "penult";
  return std::nullopt;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<fs::path> cache_dir_for(const std::string& key) {
  const auto root = cache_root();
  if (!root) return std::nullopt;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return *root / buf;
}

// ---- board plumbing ----

penult::RuleSet parse_game(const std::string& name) { return penult::rules_from_name(name); }

std::string board_lines(const std::vector<penult::Board>& boards) {
  std::string out;
  for (const auto& b : boards) {
    out += penult::board_to_json(b);
    out += '\n';
  }
  return out;
}

struct EnumArgs {
  std::string game;
  int n = 0;
  bool count_only = false;
  bool want_spectrum = false;
  std::string out_path, checkpoint_path;
  bool resume = false;
  int workers = 0;
  uint64_t node_budget = 1'000'000'000;
};

int run_enumerate(const EnumArgs& args) {
  const penult::RuleSet game = parse_game(args.game);
  const int universe = penult::universe_size(game, args.n);
  if (universe < 1 || universe > 64)
    throw std::invalid_argument("enumeration supports universes of at most 64 moves");
  const penult::FastGame& fg = penult::fast_game(game, args.n);

  const std::string cache_key =
      std::string("enumerate|") + args.game + "|" + std::to_string(args.n);
  const auto cache = cache_dir_for(cache_key);

  std::vector<penult::Board> classes;
  bool complete = false;
  bool from_cache = false;

  if (cache && !args.resume && fs::exists(*cache / "meta.json")) {
    try {
      const json meta = json::parse(read_input((*cache / "meta.json").string()));
      if (meta.value("complete", false) && meta.value("key", "") == cache_key) {
        std::ifstream in(*cache / "archive.jsonl");
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) classes.push_back(penult::board_from_json(line));
        complete = true;
        from_cache = true;
      }
    } catch (...) {
      classes.clear();
      from_cache = false;  // unreadable cache entries are ignored
    }
  }

  penult::EnumResult result;
  if (!from_cache) {
    penult::EnumOptions opts;
    opts.node_budget = args.node_budget;
    opts.workers = args.workers;

    std::unordered_set<uint64_t> seed;
    if (args.resume) {
      if (args.checkpoint_path.empty())
        throw std::invalid_argument("--resume needs --checkpoint");
      if (fs::exists(args.checkpoint_path)) {
        const json ck = json::parse(read_input(args.checkpoint_path));
        opts.resume_from_prefix = ck.value("prefix_mask", uint64_t{0});
      }
      if (!args.out_path.empty() && fs::exists(args.out_path)) {
        std::ifstream in(args.out_path);
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) seed.insert(fg.mask(penult::board_from_json(line)));
      }
      opts.seed_classes = &seed;
    }

    std::ofstream archive;
    if (!args.checkpoint_path.empty() && !args.out_path.empty()) {
      archive.open(args.out_path, args.resume ? std::ios::app : std::ios::trunc);
      opts.on_progress = [&](uint64_t next_prefix, uint64_t emitted,
                             const std::vector<uint64_t>& fresh) {
        for (uint64_t m : fresh) archive << penult::board_to_json(fg.board(m)) << '\n';
        archive.flush();
        ordered_json ck;
        ck["prefix_mask"] = next_prefix;
        ck["decided_count"] = opts.prefix_depth;
        ck["emitted_count"] = emitted;
        std::ofstream cko(args.checkpoint_path, std::ios::trunc);
        cko << ck.dump() << '\n';
      };
    }

    result = penult::enumerate_penults(game, args.n, opts);
    classes = result.classes;
    complete = result.complete;
    archive.close();

    if (complete && cache) {
      std::error_code ec;
      fs::create_directories(*cache, ec);
      if (!ec) {
        try {
          write_output(board_lines(classes), (*cache / "archive.jsonl").string());
          ordered_json meta;
          meta["key"] = cache_key;
          meta["complete"] = true;
          meta["classes"] = classes.size();
          write_output(meta.dump() + "\n", (*cache / "meta.json").string());
        } catch (...) {
          // cache writes are best-effort
        }
      }
    }
  }

  if (complete && !args.out_path.empty())
    write_output(board_lines(classes), args.out_path);  // final, sorted archive

  if (!complete) {
    ordered_json summary;
    summary["complete"] = false;
    summary["classes_so_far"] = classes.size();
    summary["nodes"] = result.nodes;
    summary["node_budget"] = args.node_budget;
    std::cout << summary.dump() << '\n';
    return kExitBudget;
  }

  if (args.count_only) {
    ordered_json summary;
    summary["classes"] = classes.size();
    std::cout << summary.dump() << '\n';
  } else if (args.want_spectrum) {
    const penult::Spectrum s = penult::spectrum_of(game, args.n, classes);
    ordered_json out;
    out["game"] = args.game;
    out["n"] = args.n;
    ordered_json counts;
    for (const auto& [tokens, count] : s.classes) counts[std::to_string(tokens)] = count;
    out["classes"] = std::move(counts);
    out["total"] = classes.size();
    if (!s.classes.empty()) {
      out["L"] = s.classes.begin()->first;
      out["U"] = s.classes.rbegin()->first;
    }
    out["interval"] = penult::is_interval(s);
    std::cout << out.dump() << '\n';
  } else if (args.out_path.empty()) {
    std::cout << board_lines(classes);
  } else {
    ordered_json summary;
    summary["classes"] = classes.size();
    summary["complete"] = true;
    std::cout << summary.dump() << '\n';
  }
  return kExitOk;
}

int run_classify(const std::string& in_path, const std::string& expect,
                 std::optional<int> expect_tokens) {
  const penult::Board b = penult::parse_board(read_input(in_path));
  const penult::Classification cls = penult::classify(b);
  const int tokens = penult::token_count(b);
  ordered_json out;
  out["game"] = penult::rules_name(b.game);
  out["n"] = int(b.n);
  out["tokens"] = tokens;
  out["classification"] = penult::classification_name(cls);
  bool ok = true;
  if (!expect.empty() && expect != penult::classification_name(cls)) {
    out["expected"] = expect;
    ok = false;
  }
  if (expect_tokens && *expect_tokens != tokens) {
    out["expected_tokens"] = *expect_tokens;
    ok = false;
  }
  std::cout << out.dump() << '\n';
  return ok ? kExitOk : kExitViolation;
}

struct ConstructArgs {
  std::string family;
  int n = 0;
  std::optional<int> m, k, l, variant;
};

int run_construct(const ConstructArgs& a) {
  using namespace penult;
  if (a.family == "dbfix") {
    std::cout << board_lines(db_fixtures(a.n));
    return kExitOk;
  }
  Board b = Board::empty(RuleSet::Tak, 1);
  if (a.family == "a" || a.family == "b" || a.family == "c") {
    b = tic_dual_family(a.family[0], a.n);
  } else if (a.family == "d") {
    if (!a.m) throw std::invalid_argument("--family d needs --m");
    b = tic_dual_D(a.n, *a.m);
  } else if (a.family == "compose") {
    if (!a.k || !a.variant) throw std::invalid_argument("--family compose needs --k and --variant");
    const int k = *a.k, rest = a.n - k;
    if (*a.variant == 1)
      b = tic_dual_compose(tic_dual_family('a', k), tic_dual_family('b', rest));
    else if (*a.variant == 2)
      b = tic_dual_compose(tic_dual_family('b', k), tic_dual_family('c', rest));
    else
      throw std::invalid_argument("compose variant is 1 (a+b) or 2 (b+c)");
  } else if (a.family == "diamond") {
    if (!a.k || !a.l) throw std::invalid_argument("--family diamond needs --k and --l");
    b = tak_variable_diamond(a.n, *a.k, *a.l);
  } else if (a.family == "lsnake") {
    b = tak_l_snake(a.n, a.variant.value_or(1));
  } else if (a.family == "snake") {
    b = tak_snake(a.n);
  } else {
    throw std::invalid_argument("unknown family: " + a.family);
  }
  std::cout << board_to_json(b) << '\n';
  return kExitOk;
}

int run_solve(const std::string& game_name, int n, const std::string& table_path) {
  const penult::RuleSet game = parse_game(game_name);
  const int limit = game == penult::RuleSet::DbAbbrev ? 4 : 5;
  if (n < 1 || n > limit)
    throw std::invalid_argument("solve supports n <= " + std::to_string(limit) +
                                " for this game");
  penult::GridSolver solver(game, n);
  const penult::Outcome outcome = solver.solve_start();
  if (!table_path.empty()) {
    std::vector<std::pair<uint64_t, penult::Outcome>> rows(solver.table().begin(),
                                                           solver.table().end());
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    out << "# canonical occupancy mask (hex, bit i = universe index i) -> outcome\n";
    for (const auto& [mask, o] : rows)
      out << std::hex << mask << std::dec << '\t' << penult::outcome_name(o) << '\n';
    write_output(out.str(), table_path);
  }
  ordered_json out;
  out["game"] = game_name;
  out["n"] = n;
  out["outcome"] = penult::outcome_name(outcome);
  out["states"] = solver.table().size();
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_strategy(const std::string& game_name, int n, const std::string& axis,
                 const std::string& role, bool opening_center, uint64_t budget) {
  penult::MirrorStrategy s;
  s.axis = penult::axis_from_name(axis);
  s.opening_center = opening_center;
  if (role == "first")
    s.role = penult::Role::First;
  else if (role == "second")
    s.role = penult::Role::Second;
  else
    throw std::invalid_argument("--role is first or second");
  penult::ValidateOptions opts;
  opts.node_budget = budget;
  const penult::ValidateResult r =
      penult::validate_strategy(parse_game(game_name), n, s, opts);
  ordered_json out;
  if (r.budget_exceeded) {
    out["verdict"] = "budget_exceeded";
    out["nodes"] = r.nodes;
    std::cout << out.dump() << '\n';
    return kExitBudget;
  }
  if (r.wins_all) {
    out["verdict"] = "wins_all";
    out["nodes"] = r.nodes;
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  out["verdict"] = "counterexample";
  out["line"] = json::parse(penult::playline_to_json(*r.counterexample));
  std::cout << out.dump() << '\n';
  return kExitViolation;
}

std::vector<long long> parse_heaps(const std::string& text) {
  std::vector<long long> heaps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) heaps.push_back(std::stoll(item));
  if (heaps.empty()) throw std::invalid_argument("empty position argument");
  return heaps;
}

int run_matein(const std::string& game_name, const std::string& pos) {
  ordered_json out;
  out["game"] = game_name;
  out["pos"] = pos;
  try {
    if (game_name == "subtract123") {
      out["mate_in"] = penult::mate_in_subtract123(std::stoll(pos));
    } else if (game_name == "nim") {
      out["mate_in"] = penult::mate_in_nim(parse_heaps(pos));
    } else if (game_name == "wythoff") {
      const auto heaps = parse_heaps(pos);
      if (heaps.size() != 2) throw std::invalid_argument("wythoff takes a pair a,b");
      out["mate_in"] = penult::mate_in_wythoff(heaps[0], heaps[1]);
    } else if (game_name == "tak" || game_name == "tic") {
      const penult::Board b = penult::parse_board(read_input(pos));
      if (penult::rules_name(b.game) != game_name)
        throw std::invalid_argument("board game does not match --game");
      if (b.n > 5) throw std::invalid_argument("mate depth supports n <= 5");
      penult::GridSolver solver(b.game, b.n);
      out["mate_in"] = solver.mate_in(b);
    } else {
      throw std::invalid_argument("matein games: subtract123, nim, wythoff, tak, tic");
    }
  } catch (const std::domain_error& e) {
    out["error"] = e.what();
    std::cout << out.dump() << '\n';
    return kExitBadInput;
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_render(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
  const penult::Board b = penult::parse_board(read_input(in_path));
  std::string text;
  if (format == "ascii")
    text = penult::render_ascii(b);
  else if (format == "svg")
    text = penult::render_svg(b);
  else if (format == "tikz")
    text = penult::render_tikz(b);
  else
    throw std::invalid_argument("--format is ascii, svg or tikz");
  write_output(text, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"penult: classify, enumerate, construct and solve positions of "
               "impartial positional games"};
  app.require_subcommand(1);

  EnumArgs enum_args;
  auto add_enum_flags = [&](CLI::App* cmd) {
    cmd->add_option("--game", enum_args.game, "tak|tic|dualtic|db")->required();
    cmd->add_option("--n", enum_args.n, "side length (dots per side for db)")->required();
    cmd->add_option("--out", enum_args.out_path, "write the class archive here");
    cmd->add_option("--checkpoint", enum_args.checkpoint_path, "progress file");
    cmd->add_flag("--resume", enum_args.resume, "continue from the checkpoint");
    cmd->add_option("--workers", enum_args.workers, "worker threads (0 = auto)");
    cmd->add_option("--node-budget", enum_args.node_budget, "search node limit");
  };
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate penults up to isometry");
  add_enum_flags(enumerate);
  enumerate->add_flag("--count-only", enum_args.count_only, "print only the class count");
  enumerate->add_flag("--spectrum", enum_args.want_spectrum, "print counts by token count");
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "token-count spectrum of penults");
  add_enum_flags(spectrum_cmd);

  std::string in_path = "-", expect;
  std::optional<int> expect_tokens;
  auto add_classify_flags = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "board file (ascii or json), - for stdin");
    cmd->add_option("--expect", expect, "terminal|ult|penult|other")
        ->check(CLI::IsMember({"terminal", "ult", "penult", "other"}));
    cmd->add_option("--expect-tokens", expect_tokens, "required token count");
  };
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a position");
  add_classify_flags(classify_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a position against expectations");
  add_classify_flags(verify_cmd);

  ConstructArgs cons;
  CLI::App* construct = app.add_subcommand("construct", "generate a named penult family");
  construct->add_option("--family", cons.family,
                        "a|b|c|d|compose|diamond|lsnake|snake|dbfix")->required();
  construct->add_option("--n", cons.n, "board size")->required();
  construct->add_option("--m", cons.m, "d-family parameter (9..13)");
  construct->add_option("--k", cons.k, "split / top-row gap");
  construct->add_option("--l", cons.l, "left-column gap");
  construct->add_option("--variant", cons.variant, "family variant");

  std::string solve_game;
  int solve_n = 0;
  std::string table_path;
  CLI::App* solve_cmd = app.add_subcommand("solve", "exact outcome of the start position");
  solve_cmd->add_option("--game", solve_game, "tak|tic|dualtic|db")->required();
  solve_cmd->add_option("--n", solve_n, "side length")->required();
  solve_cmd->add_option("--table", table_path, "dump the full W/L table here");

  std::string strat_game, strat_axis, strat_role;
  int strat_n = 0;
  bool opening_center = false;
  uint64_t strat_budget = 200'000'000;
  CLI::App* strategy_cmd = app.add_subcommand("strategy", "validate a mirroring strategy");
  strategy_cmd->add_option("--game", strat_game, "tak|tic")->required();
  strategy_cmd->add_option("--n", strat_n, "side length")->required();
  strategy_cmd->add_option("--axis", strat_axis, "origin|vline|hline|diag|antidiag")->required();
  strategy_cmd->add_option("--role", strat_role, "first|second")->required();
  strategy_cmd->add_flag("--opening-center", opening_center, "take the centre first");
  strategy_cmd->add_option("--node-budget", strat_budget, "search node limit");

  std::string mate_game, mate_pos;
  CLI::App* matein = app.add_subcommand("matein", "forced-loss depth of a losing position");
  matein->add_option("--game", mate_game, "subtract123|nim|wythoff|tak|tic")->required();
  matein->add_option("--pos", mate_pos, "heap / comma heaps / pair / board file")->required();

  std::string render_format = "ascii", render_out;
  CLI::App* render_cmd = app.add_subcommand("render", "render a board");
  render_cmd->add_option("--in", in_path, "board file, - for stdin");
  render_cmd->add_option("--format", render_format, "ascii|svg|tikz");
  render_cmd->add_option("--out", render_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (spectrum_cmd->parsed()) {
      enum_args.want_spectrum = true;
      return run_enumerate(enum_args);
    }
    if (classify_cmd->parsed() || verify_cmd->parsed())
      return run_classify(in_path, expect, expect_tokens);
    if (construct->parsed()) return run_construct(cons);
    if (solve_cmd->parsed()) return run_solve(solve_game, solve_n, table_path);
    if (strategy_cmd->parsed())
      return run_strategy(strat_game, strat_n, strat_axis, strat_role, opening_center,
                          strat_budget);
    if (matein->parsed()) return run_matein(mate_game, mate_pos);
    if (render_cmd->parsed()) return run_render(in_path, render_format, render_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitBadInput;
}
