#include "penult/render.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace penult {

namespace {

constexpr const char* kDot = "\u2022";

std::string grid_ascii(const Board& b) {
  std::ostringstream out;
  out << rules_name(b.game) << ' ' << int(b.n) << '\n';
  for (int r = 0; r < b.n; ++r) {
    for (int c = 0; c < b.n; ++c) out << (b.test(cell_index(b.n, r, c)) ? '#' : '.');
    out << '\n';
  }
  return out.str();
}

std::string db_ascii(const Board& b) {
  const int n = b.n;
  std::ostringstream out;
  out << rules_name(b.game) << ' ' << n << '\n';
  for (int r = 0; r < n; ++r) {
    std::string dots;
    for (int c = 0; c < n; ++c) {
      dots += kDot;
      if (c + 1 < n) dots += b.test(h_edge_index(n, r, c)) ? '-' : ' ';
    }
    out << dots << '\n';
    if (r + 1 < n) {
      std::string bars;
      for (int c = 0; c < n; ++c) {
        bars += b.test(v_edge_index(n, r, c)) ? '|' : ' ';
        if (c + 1 < n) bars += ' ';
      }
      while (!bars.empty() && bars.back() == ' ') bars.pop_back();
      out << bars << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string render_ascii(const Board& b) {
  return b.game == RuleSet::DbAbbrev ? db_ascii(b) : grid_ascii(b);
}

Board parse_ascii(const std::string& text) {
  std::istringstream in(text);
  std::string name;
  int n = 0;
  if (!(in >> name >> n)) throw std::invalid_argument("ascii board: missing header");
  const RuleSet game = rules_from_name(name);
  Board b = Board::empty(game, n);
  std::string line;
  std::getline(in, line);  // rest of header line
  if (game != RuleSet::DbAbbrev) {
    for (int r = 0; r < n; ++r) {
      if (!std::getline(in, line) || static_cast<int>(line.size()) < n)
        throw std::invalid_argument("ascii board: short row");
      for (int c = 0; c < n; ++c) {
        if (line[c] == '#')
          b.set(cell_index(n, r, c));
        else if (line[c] != '.')
          throw std::invalid_argument("ascii board: bad cell character");
      }
    }
    return b;
  }
  // Dot rows alternate with vertical-edge rows.  The dot glyph is multi-byte,
  // so walk dot rows by column position rather than byte offset.
  const std::string dot = kDot;
  for (int r = 0; r < n; ++r) {
    if (!std::getline(in, line)) throw std::invalid_argument("ascii board: short db row");
    size_t pos = 0;
    for (int c = 0; c < n; ++c) {
      if (line.compare(pos, dot.size(), dot) != 0)
        throw std::invalid_argument("ascii board: expected dot");
      pos += dot.size();
      if (c + 1 < n) {
        if (pos < line.size() && line[pos] == '-') b.set(h_edge_index(n, r, c));
        if (pos < line.size()) ++pos;
      }
    }
    if (r + 1 < n) {
      if (!std::getline(in, line)) line.clear();
      for (int c = 0; c < n; ++c) {
        const size_t col = static_cast<size_t>(2 * c);
        if (col < line.size() && line[col] == '|') b.set(v_edge_index(n, r, c));
      }
    }
  }
  return b;
}

std::string render_svg(const Board& b) {
  const int n = b.n;
  const int unit = 24;
  std::ostringstream out;
  if (b.game != RuleSet::DbAbbrev) {
    const int size = n * unit;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (b.test(cell_index(n, r, c)))
          out << "  <rect x=\"" << c * unit << "\" y=\"" << r * unit << "\" width=\"" << unit
              << "\" height=\"" << unit << "\" fill=\"#3465a4\"/>\n";
    for (int i = 0; i <= n; ++i) {
      out << "  <line x1=\"0\" y1=\"" << i * unit << "\" x2=\"" << size << "\" y2=\"" << i * unit
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      out << "  <line x1=\"" << i * unit << "\" y1=\"0\" x2=\"" << i * unit << "\" y2=\"" << size
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
  }
  const int size = (n - 1) * unit + 16;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  auto px = [&](int c) { return 8 + c * unit; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c + 1 < n; ++c)
      if (b.test(h_edge_index(n, r, c)))
        out << "  <line x1=\"" << px(c) << "\" y1=\"" << px(r) << "\" x2=\"" << px(c + 1)
            << "\" y2=\"" << px(r) << "\" stroke=\"#cc0000\" stroke-width=\"3\"/>\n";
  for (int r = 0; r + 1 < n; ++r)
    for (int c = 0; c < n; ++c)
      if (b.test(v_edge_index(n, r, c)))
        out << "  <line x1=\"" << px(c) << "\" y1=\"" << px(r) << "\" x2=\"" << px(c)
            << "\" y2=\"" << px(r + 1) << "\" stroke=\"#cc0000\" stroke-width=\"3\"/>\n";
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out << "  <circle cx=\"" << px(c) << "\" cy=\"" << px(r) << "\" r=\"3\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_tikz(const Board& b) {
  const int n = b.n;
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.4]\n";
  if (b.game != RuleSet::DbAbbrev) {
    out << "\\draw[step=1cm,black,very thin] (0,0) grid (" << n << ',' << n << ");\n";
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (b.test(cell_index(n, r, c))) {
          const int y = n - 1 - r;  // tikz y grows upward
          out << "\\fill[blue] (" << c << ',' << y << ") rectangle (" << c + 1 << ',' << y + 1
              << ");\n";
        }
  } else {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out << "\\node[black] at (" << c << ',' << n - 1 - r << ") {$\\bullet$};\n";
    for (int r = 0; r < n; ++r)
      for (int c = 0; c + 1 < n; ++c)
        if (b.test(h_edge_index(n, r, c)))
          out << "\\draw[red, thick] (" << c << "+0.15," << n - 1 - r << ") -- (" << c + 1
              << "-0.15," << n - 1 - r << ");\n";
    for (int r = 0; r + 1 < n; ++r)
      for (int c = 0; c < n; ++c)
        if (b.test(v_edge_index(n, r, c)))
          out << "\\draw[red, thick] (" << c << ',' << n - 2 - r << "+0.15) -- (" << c << ','
              << n - 1 - r << "-0.15);\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string board_to_json(const Board& b) {
  nlohmann::ordered_json j;
  j["game"] = rules_name(b.game);
  j["n"] = int(b.n);
  if (b.game != RuleSet::DbAbbrev) {
    auto cells = nlohmann::json::array();
    for (int r = 0; r < b.n; ++r)
      for (int c = 0; c < b.n; ++c)
        if (b.test(cell_index(b.n, r, c))) cells.push_back({r, c});
    j["cells"] = std::move(cells);
  } else {
    auto edges = nlohmann::json::array();
    for (int i = 0; i < b.universe(); ++i)
      if (b.test(i)) {
        const EdgeRef e = edge_of_index(b.n, i);
        edges.push_back({std::string(1, e.kind), e.r, e.c});
      }
    j["edges"] = std::move(edges);
  }
  return j.dump();
}

Board board_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const RuleSet game = rules_from_name(j.at("game").get<std::string>());
  const int n = j.at("n").get<int>();
  Board b = Board::empty(game, n);
  if (game != RuleSet::DbAbbrev) {
    for (const auto& cell : j.at("cells")) {
      const int r = cell.at(0).get<int>(), c = cell.at(1).get<int>();
      if (r < 0 || r >= n || c < 0 || c >= n)
        throw std::invalid_argument("board json: cell out of range");
      b.set(cell_index(n, r, c));
    }
  } else {
    for (const auto& edge : j.at("edges")) {
      const std::string kind = edge.at(0).get<std::string>();
      const int r = edge.at(1).get<int>(), c = edge.at(2).get<int>();
      if (kind == "h" && r >= 0 && r < n && c >= 0 && c < n - 1)
        b.set(h_edge_index(n, r, c));
      else if (kind == "v" && r >= 0 && r < n - 1 && c >= 0 && c < n)
        b.set(v_edge_index(n, r, c));
      else
        throw std::invalid_argument("board json: bad edge");
    }
  }
  return b;
}

Board parse_board(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') continue;
    return ch == '{' ? board_from_json(text) : parse_ascii(text);
  }
  throw std::invalid_argument("empty board input");
}

}  // namespace penult
