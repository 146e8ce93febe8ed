#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "antf/graph.hpp"
#include "antf/simplicial.hpp"
#include "antf/tspread.hpp"

namespace antf {

using Input = std::variant<Graph, SimplicialComplex, BorelSpec>;

struct ParsedInput {
  Input value;
  /// Non-fatal findings, e.g. isolated vertices.
  std::vector<std::string> warnings;
};

/// Parses one of
///   graph <n>      followed by "i j" lines
///   complex <n>    followed by one facet per line
///   tspread t=<t> n=<n> u=<i_1>,...,<i_d>
/// '#' starts a comment; blank lines are skipped. Throws ParseError.
ParsedInput parse_input(std::string_view text);
ParsedInput parse_input_file(const std::filesystem::path& path);

std::string serialize(const Input& input);
std::string kind_name(const Input& input);

}  // namespace antf
