#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "codegree/hypergraph.hpp"

namespace codegree {

// Hypergraph text format:
//
//   n k
//   1 2 3
//   # comment
//   1 4 5
//
// The first non-comment line is the header. Each edge line holds k strictly
// increasing labels in [n] separated by single spaces. Duplicate edges are an
// error. Blank lines are ignored. The writer emits the header followed by the
// edges in colex order, one per line, with a trailing newline.

/// Throws ParseError with a 1-based line number.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph &h);

Hypergraph read_hypergraph(const std::filesystem::path &path);
void write_hypergraph(const std::filesystem::path &path, const Hypergraph &h);

} // namespace codegree
