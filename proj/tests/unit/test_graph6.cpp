#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/graph6.hpp"

using namespace srgddg;

// Expected strings below were produced by an independent graph6 writer.
TEST_CASE("graph6 known encodings") {
  CHECK(graph6::encode(gen::edgeless(1)) == "@");
  CHECK(graph6::encode(gen::complete(4)) == "C~");
  CHECK(graph6::encode(gen::cycle(5)) == "Dhc");
  CHECK(graph6::encode(gen::petersen()) == "IheA@GUAo");
  CHECK(graph6::encode(gen::path(62)).substr(0, 6) == "}hCGGC");
  CHECK(graph6::encode(gen::path(63)).substr(0, 10) == "~??~hCGGC@");
}

TEST_CASE("graph6 decode") {
  CHECK(graph6::decode("IheA@GUAo") == gen::petersen());
  CHECK(graph6::decode(">>graph6<<Dhc") == gen::cycle(5));
  CHECK(graph6::decode("?").order() == 0);
}

TEST_CASE("graph6 roundtrip on random graphs") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 5, 6, 7, 62, 63, 64, 100, 300}) {
    for (double p : {0.1, 0.5, 0.9}) {
      Graph g = oracle::random_graph(n, p, rng);
      std::string s = graph6::encode(g);
      CHECK(graph6::decode(s) == g);
      for (char ch : s) CHECK((ch >= 63 && ch <= 126));
    }
  }
}

TEST_CASE("graph6 rejects malformed input with offsets") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      graph6::decode(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("D h") >= 1);         // byte out of range
  CHECK(offset_of("Dh") >= 0);          // too short
  CHECK(offset_of("Dhcc") >= 0);        // too long
  CHECK(offset_of("Dhd") == 2);         // nonzero padding bits
  CHECK(offset_of("~??D") >= 0);        // long form used for a small order
  CHECK_THROWS_AS(graph6::decode(":Fa@x^"), ParseError);  // sparse6 is not graph6
}
