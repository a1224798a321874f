#pragma once

#include <string>
#include <string_view>

#include "regspec/graph/graph.hpp"

namespace regspec {

/// graph6 text for g (no trailing newline). The upper triangle is read
/// column by column, packed into 6-bit groups, each offset by 63.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws Error(MalformedGraph6).
Graph graph6_decode(std::string_view text);

}  // namespace regspec
