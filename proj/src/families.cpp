#include "critlab/families.hpp"

#include <vector>

namespace critlab::families {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(Edge::make(i, (i + 1) % n));
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(Edge::make(i, (i + 1) % 5));
    e.push_back(Edge::make(i, i + 5));
    e.push_back(Edge::make(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, e);
}

Graph subdivided_k4() {
  return Graph(5, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
}

Graph prism() {
  return Graph(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                                    {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace critlab::families
