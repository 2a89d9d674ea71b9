#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "codegb/binary_matrix.hpp"
#include "codegb/cycles.hpp"

namespace codegb {

/// Matrix text: one row per line of '0'/'1' characters, whitespace
/// between digits allowed, '#' starts a comment, blank lines ignored.
/// Throws ParseError naming the offending line.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix_file(const std::string& path);

/// Graph text: first content line "V <count>", then one "u v" edge per
/// line (1-based labels); '#' comments and blank lines as for matrices.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

/// A nonempty string of '0'/'1' characters.
BitVec parse_bit_string(std::string_view text);

}  // namespace codegb
