#include "critlab/graph6.hpp"

#include <vector>

#include "critlab/error.hpp"

namespace critlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", base);

  const int first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw Graph6Error("long-form graph6 (n > 62) is not supported", base);
  if (first < 63 || first > 126) throw Graph6Error("invalid length byte", base);
  const int n = first - 63;
  if (n == 0) throw Graph6Error("graph with zero vertices", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw Graph6Error("truncated adjacency data", base + text.size());
  if (text.size() > 1 + body) throw Graph6Error("trailing characters", base + 1 + body);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t p = 0; p < body; ++p) {
    const int c = static_cast<unsigned char>(text[1 + p]);
    if (c < 63 || c > 126) throw Graph6Error("invalid data byte", base + 1 + p);
    const int chunk = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (chunk >> b) & 1;
      if (k >= bits) {
        if (set) throw Graph6Error("nonzero padding bits", base + 1 + p);
        continue;
      }
      if (!set) continue;
      // Bit k enumerates the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
      int v = 1;
      std::size_t start = 0;
      while (start + v <= k) {
        start += v;
        ++v;
      }
      edges.push_back(Edge{static_cast<Vertex>(k - start), v});
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw UsageError("graph6 short form supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

}  // namespace critlab
