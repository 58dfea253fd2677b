#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rademacher/graph.hpp"

namespace rademacher {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Standard graph6 encoding, no header and no trailing newline.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace. Anything
/// else that is not a canonical encoding (bad characters, wrong length,
/// nonzero padding bits) throws Graph6Error, so decode/encode is bit-exact.
Graph from_graph6(std::string_view text);

/// One graph per nonblank line.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace rademacher
