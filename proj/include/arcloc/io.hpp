#pragma once

// Edge-list text format:
//
//   # comment lines start with '#'; blank lines are ignored
//   n 4          first non-comment line: vertex count
//   0 1          one arc per line: 0 dominates 1
//   1 2
//
// Vertices are 0-indexed decimal. Anything after a '#' on a line is ignored.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "arcloc/classes.hpp"
#include "arcloc/digraph.hpp"

namespace arcloc {

// Throws ParseError carrying the 1-based line number.
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(std::string_view text);
// Throws ParseError (line 0) when the file cannot be opened.
Digraph read_edge_list_file(const std::filesystem::path& path);

// Canonical serialisation: header then arcs in lexicographic order.
std::string to_edge_list(const Digraph& d);

// "H1 0 1 2 3": pattern name and the four vertices (v1, v2, v3, v4).
std::string witness_record(const PatternWitness& w);

}  // namespace arcloc
