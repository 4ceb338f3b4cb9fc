#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ftmd/graph.hpp"

namespace ftmd {

/// Input file error; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge list: a header "n m", then m lines "u v" with 0 <= u < v < n.
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Lines "v w" with w a non-negative decimal; unlisted vertices weigh 1.
WeightMap parse_weights(std::istream& in, std::size_t n);
WeightMap read_weights(const std::filesystem::path& path, std::size_t n);

void write_edge_list(std::ostream& out, const Graph& g);

/// Integral values print without a fractional part; anything else uses the
/// shortest round-trip representation.
std::string format_weight(double w);

}  // namespace ftmd
