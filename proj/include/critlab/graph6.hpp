#pragma once

#include <string>
#include <string_view>

#include "critlab/graph.hpp"

namespace critlab {

/// Largest order representable in the short (single length byte) graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted; anything else malformed throws Graph6Error carrying
/// the offending byte offset. n = 0 is rejected.
Graph parse_graph6(std::string_view text);

/// Throws UsageError when the order exceeds kGraph6MaxOrder.
std::string encode_graph6(const Graph& g);

}  // namespace critlab
