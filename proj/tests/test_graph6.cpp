#include <random>

#include "doctest.h"

#include "critlab/error.hpp"
#include "critlab/families.hpp"
#include "critlab/graph6.hpp"
#include "oracles.hpp"

using namespace critlab;
using namespace critlab::families;

TEST_CASE("small strings") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3 == complete(3));
  const Graph two = parse_graph6("A?");
  CHECK(two.order() == 2);
  CHECK(two.size() == 0);
  const Graph three = parse_graph6("B?");
  CHECK(three.order() == 3);
  CHECK(three.size() == 0);
  CHECK(encode_graph6(complete(3)) == "Bw");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(parse_graph6(encode_graph6(cycle(5))) == cycle(5));
}

TEST_CASE("oracle encoder agrees on the named families") {
  for (const Graph& g : {complete(3), cycle(5), cycle(6), complete(5), petersen(), subdivided_k4(), prism(),
                         complete_bipartite(2, 3), star(3), path(4)}) {
    CHECK(encode_graph6(g) == oracle::graph6(oracle::from(g)));
    CHECK(parse_graph6(oracle::graph6(oracle::from(g))) == g);
  }
}

TEST_CASE("header and line endings") {
  CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
  CHECK(parse_graph6("Bw\n") == complete(3));
}

TEST_CASE("malformed input reports the byte offset") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("?") == 0);       // n = 0
  CHECK(offset_of("B") == 1);       // truncated
  CHECK(offset_of("Bw?") == 2);     // trailing garbage
  CHECK(offset_of("B!") == 1);      // character below 63
  CHECK(offset_of("Bx") == 1);      // nonzero padding bits
  CHECK(offset_of("~") == 0);       // long form not supported
  CHECK(offset_of(">>graph6<<B") == 11);
}

TEST_CASE("round trip exhaustive for n <= 5 and random up to n = 62") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      oracle::Plain p(n);
      int bit = 0;
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
          if (mask >> bit & 1) p.add(u, v);
        }
      }
      const std::string s = oracle::graph6(p);
      const Graph g = parse_graph6(s);
      CHECK(g == oracle::to_graph(p));
      CHECK(encode_graph6(g) == s);
    }
  }
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const int n = 6 + static_cast<int>(rng() % 57);
    const oracle::Plain p = oracle::random_graph(rng, n, 0.1 + 0.8 * (t % 5) / 5.0);
    const Graph g = oracle::to_graph(p);
    CHECK(encode_graph6(g) == oracle::graph6(p));
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("order above the short form is rejected") {
  CHECK_THROWS_AS(encode_graph6(Graph(63)), UsageError);
}

TEST_CASE("fixture lines round trip") {
  int count = 0;
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/connected_le7.g6")) {
    CHECK(encode_graph6(parse_graph6(line)) == line);
    ++count;
  }
  CHECK(count == 996);
}
