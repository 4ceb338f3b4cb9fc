#include "ftmd/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace ftmd {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : what),
      line_(line) {}

namespace {

// Whitespace-separated tokens of every meaningful line.
struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw(text.data() + pos, end - pos);
    ++number;
    pos = end + 1;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t parse_count(std::string_view token, std::size_t line,
                          const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("expected \"") + shape + "\"");
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  const std::string text = slurp(in);
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header \"n m\"");
  const Line& header = lines.front();
  expect_tokens(header, 2, "n m");
  const auto n = parse_count(header.tokens[0], header.number, "vertex count");
  const auto m = parse_count(header.tokens[1], header.number, "edge count");
  if (n > 0xFFFFFFFFu) throw ParseError(header.number, "vertex count too large");
  if (lines.size() - 1 != m) {
    throw ParseError(header.number, "header declares " + std::to_string(m) +
                                        " edges, found " +
                                        std::to_string(lines.size() - 1));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_tokens(line, 2, "u v");
    const auto u = parse_count(line.tokens[0], line.number, "vertex id");
    const auto v = parse_count(line.tokens[1], line.number, "vertex id");
    if (u >= v) throw ParseError(line.number, "edge must satisfy u < v");
    if (v >= n) {
      throw ParseError(line.number,
                       "vertex " + std::to_string(v) + " out of range");
    }
    const std::pair<VertexId, VertexId> e{static_cast<VertexId>(u),
                                          static_cast<VertexId>(v)};
    if (!seen.insert(e).second) {
      throw ParseError(line.number, "duplicate edge " + std::to_string(u) +
                                        " " + std::to_string(v));
    }
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_edge_list(in);
}

WeightMap parse_weights(std::istream& in, std::size_t n) {
  std::vector<double> weights(n, 1.0);
  std::vector<bool> listed(n, false);
  const std::string text = slurp(in);
  for (const Line& line : tokenize(text)) {
    expect_tokens(line, 2, "v w");
    const auto v = parse_count(line.tokens[0], line.number, "vertex id");
    if (v >= n) {
      throw ParseError(line.number,
                       "vertex " + std::to_string(v) + " out of range");
    }
    if (listed[v]) {
      throw ParseError(line.number,
                       "vertex " + std::to_string(v) + " listed twice");
    }
    listed[v] = true;
    const auto token = line.tokens[1];
    double w = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                           w, std::chars_format::fixed);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(w) || w < 0.0) {
      throw ParseError(line.number, "invalid weight '" + std::string(token) +
                                        "' (expected a non-negative decimal)");
    }
    weights[v] = w;
  }
  return WeightMap(std::move(weights));
}

WeightMap read_weights(const std::filesystem::path& path, std::size_t n) {
  auto in = open(path);
  return parse_weights(in, n);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_weight(double w) {
  if (std::isfinite(w) && std::floor(w) == w && std::fabs(w) < 9.0e15) {
    return std::to_string(static_cast<long long>(w));
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

}  // namespace ftmd
