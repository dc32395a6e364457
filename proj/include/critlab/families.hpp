#pragma once

#include "critlab/graph.hpp"

// Named small graphs used throughout the tests and the CLI examples.
namespace critlab::families {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// Sides are 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
Graph petersen();
/// K4 on {0,1,2,3} with edge 0-1 replaced by the path 0-4-1.
Graph subdivided_k4();
/// Two triangles {0,1,2} and {3,4,5} joined by the matching i -- i+3.
Graph prism();

}  // namespace critlab::families
