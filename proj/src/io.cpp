#include "antf/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "antf/error.hpp"

namespace antf {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  return value;
}

std::size_t header_size(const Line& header, std::string_view kind) {
  if (header.tokens.size() != 2) throw ParseError(header.number, "expected '" + std::string(kind) + " <n>'");
  return to_index(header.tokens[1], header.number);
}

ParsedInput parse_graph(const std::vector<Line>& lines) {
  const std::size_t n = header_size(lines.front(), "graph");
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected an edge 'i j'");
    std::size_t i = to_index(line.tokens[0], line.number);
    std::size_t j = to_index(line.tokens[1], line.number);
    if (i < 1 || j < 1 || i > n || j > n)
      throw ParseError(line.number, "vertex out of range 1.." + std::to_string(n));
    if (i == j) throw ParseError(line.number, "loop at vertex " + std::to_string(i));
    if (seen[i][j]) throw ParseError(line.number, "duplicate edge");
    seen[i][j] = seen[j][i] = true;
    edges.emplace_back(i, j);
  }
  ParsedInput out{Graph(n, std::move(edges)), {}};
  const auto& G = std::get<Graph>(out.value);
  for (std::size_t v : G.isolated_vertices())
    out.warnings.push_back("isolated vertex " + std::to_string(v));
  return out;
}

ParsedInput parse_complex(const std::vector<Line>& lines) {
  const std::size_t n = header_size(lines.front(), "complex");
  std::vector<Facet> facets;
  std::vector<std::size_t> facet_line;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    Facet f;
    for (const auto& tok : line.tokens) {
      std::size_t v = to_index(tok, line.number);
      if (v < 1 || v > n) throw ParseError(line.number, "vertex out of range 1.." + std::to_string(n));
      f.push_back(v);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ParseError(line.number, "facet repeats a vertex");
    for (std::size_t k = 0; k < facets.size(); ++k) {
      const bool sub = std::includes(facets[k].begin(), facets[k].end(), f.begin(), f.end());
      const bool super = std::includes(f.begin(), f.end(), facets[k].begin(), facets[k].end());
      if (sub && super) throw ParseError(line.number, "duplicate facet");
      if (sub || super)
        throw ParseError(line.number, "facet comparable with the facet on line " + std::to_string(facet_line[k]));
    }
    facets.push_back(std::move(f));
    facet_line.push_back(line.number);
  }
  if (facets.empty()) throw ParseError(lines.front().number, "complex has no facets");
  return ParsedInput{SimplicialComplex(n, std::move(facets)), {}};
}

ParsedInput parse_tspread(const std::vector<Line>& lines) {
  const auto& line = lines.front();
  if (lines.size() != 1) throw ParseError(lines[1].number, "unexpected content after tspread line");
  BorelSpec spec;
  bool have_t = false, have_n = false, have_u = false;
  for (std::size_t k = 1; k < line.tokens.size(); ++k) {
    const auto& tok = line.tokens[k];
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line.number, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    if (key == "t") {
      spec.t = to_index(value, line.number);
      have_t = true;
    } else if (key == "n") {
      spec.n = to_index(value, line.number);
      have_n = true;
    } else if (key == "u") {
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string::npos) comma = value.size();
        spec.indices.push_back(to_index(std::string_view(value).substr(start, comma - start), line.number));
        start = comma + 1;
      }
      have_u = true;
    } else {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }
  if (!have_t || !have_n || !have_u) throw ParseError(line.number, "expected 'tspread t=<t> n=<n> u=<i_1>,...'");
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(line.number, e.what());
  }
  return ParsedInput{spec, {}};
}

}  // namespace

ParsedInput parse_input(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const std::string& head = lines.front().tokens.front();
  try {
    if (head == "graph") return parse_graph(lines);
    if (head == "complex") return parse_complex(lines);
    if (head == "tspread") return parse_tspread(lines);
  } catch (const InvalidArgument& e) {
    throw ParseError(lines.front().number, e.what());
  }
  throw ParseError(lines.front().number, "unknown header '" + head + "' (expected graph, complex or tspread)");
}

ParsedInput parse_input_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

std::string serialize(const Input& input) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Graph>) {
          os << "graph " << x.order() << '\n';
          for (auto [i, j] : x.edges()) os << i << ' ' << j << '\n';
        } else if constexpr (std::is_same_v<T, SimplicialComplex>) {
          os << "complex " << x.order() << '\n';
          for (const auto& f : x.facets()) {
            for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
            os << '\n';
          }
        } else {
          os << "tspread t=" << x.t << " n=" << x.n << " u=";
          for (std::size_t k = 0; k < x.indices.size(); ++k) os << (k ? "," : "") << x.indices[k];
          os << '\n';
        }
      },
      input);
  return os.str();
}

std::string kind_name(const Input& input) {
  switch (input.index()) {
    case 0: return "graph";
    case 1: return "complex";
    default: return "tspread";
  }
}

}  // namespace antf
