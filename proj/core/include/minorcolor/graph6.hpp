#pragma once

#include <string>

#include "minorcolor/graph.hpp"

namespace minorcolor {

// graph6 text format, single-byte size variant (order <= 62).
//
// Parsing yields vertices labeled 1..n in the byte order of the format.
// Emission maps the graph's vertices to positions by ascending label, so
// parse(emit(g)) == g for label sets 1..n and emit(parse(s)) == s byte for
// byte. Malformed input raises DomainError with the offending byte offset.
SimpleGraph parse_graph6(const std::string& line);
std::string to_graph6(const SimpleGraph& g);

}  // namespace minorcolor
