#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "srgddg/assembly.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/galois.hpp"
#include "srgddg/graph6.hpp"
#include "srgddg/iso.hpp"

using namespace srgddg;

namespace {

void check_relabel_invariance(const Graph& g, int perms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CanonicalForm base = canonical_form(g);
  CHECK(graph6::decode(base.certificate) == g.permuted(base.labeling));
  for (int i = 0; i < perms; ++i) {
    Graph h = g.permuted(oracle::random_permutation(g.order(), rng));
    CHECK(canonical_form(h).certificate == base.certificate);
  }
}

}  // namespace

TEST_CASE("certificates are invariant under relabeling") {
  check_relabel_invariance(gen::petersen(), 100, 1);
  check_relabel_invariance(gen::grid(4, 5), 100, 2);
  check_relabel_invariance(galois::symplectic_complement(2, galois::FiniteField(2, 1)), 100, 3);
  check_relabel_invariance(galois::symplectic_complement(2, galois::FiniteField(3, 1)), 100, 4);
  auto dec = decompose(galois::symplectic_complement(2, galois::FiniteField(3, 1)), DecomposeOptions{100'000'000, true});
  check_relabel_invariance(dec.decompositions.at(0).delta, 100, 5);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) check_relabel_invariance(oracle::random_graph(20, 0.3, rng), 10, 7 + static_cast<std::uint64_t>(i));
}

TEST_CASE("known isomorphisms and non-isomorphisms") {
  CHECK_FALSE(are_isomorphic(gen::petersen(), gen::prism(5)));
  CHECK_FALSE(oracle::isomorphic_brute(gen::petersen(), gen::prism(5)));
  CHECK(are_isomorphic(gen::triangular(5).complement(), gen::petersen()));
  CHECK(oracle::isomorphic_brute(gen::triangular(5).complement(), gen::petersen()));
  CHECK_FALSE(are_isomorphic(gen::petersen(), gen::complete(10)));
  CHECK(are_isomorphic(gen::triangular(6), galois::symplectic_complement(2, galois::FiniteField(2, 1))));
}

TEST_CASE("agrees with exhaustive search on small graphs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 6;  // up to 9 vertices
    Graph a = oracle::random_graph(n, 0.5, rng);
    // half the time compare with a relabeled copy plus at most one edge flip
    Graph b = a.permuted(oracle::random_permutation(n, rng));
    if (trial % 2) {
      std::vector<Bitset> rows;
      for (int v = 0; v < n; ++v) rows.push_back(b.neighbors(v));
      const int x = trial % n, y = (trial / 2 + 1 + x) % n;
      if (x != y) {
        rows[static_cast<std::size_t>(x)] ^= Bitset::from_members(static_cast<std::size_t>(n), std::vector<int>{y});
        rows[static_cast<std::size_t>(y)] ^= Bitset::from_members(static_cast<std::size_t>(n), std::vector<int>{x});
        b = Graph(rows);
      }
    }
    if (n <= 8 || trial % 3 == 0) CHECK(are_isomorphic(a, b) == oracle::isomorphic_brute(a, b));
  }
}

TEST_CASE("all graphs on five vertices fall into 34 classes") {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) slots.emplace_back(i, j);
  std::set<std::string> certs;
  std::map<std::string, Graph> rep;
  for (int mask = 0; mask < (1 << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < 10; ++b)
      if (mask >> b & 1) edges.push_back(slots[static_cast<std::size_t>(b)]);
    Graph g = Graph::from_edges(5, edges);
    std::string c = canonical_form(g).certificate;
    auto [it, fresh] = rep.emplace(c, g);
    if (!fresh && mask % 7 == 0) CHECK(oracle::isomorphic_brute(it->second, g));
    certs.insert(c);
  }
  CHECK(certs.size() == 34);
  std::vector<Graph> reps;
  for (auto& [c, g] : rep) reps.push_back(g);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic_brute(reps[i], reps[j]));
}

TEST_CASE("DDGs from all Hoffman cocliques of SRG(15,8,4,4) are isomorphic") {
  auto res = decompose(galois::symplectic_complement(2, galois::FiniteField(2, 1)));
  std::set<std::string> certs;
  for (const auto& d : res.decompositions) certs.insert(canonical_form(d.delta).certificate);
  CHECK(certs.size() == 1);
}

TEST_CASE("size cap") {
  IsoOptions small;
  small.size_cap = 8;
  CHECK_THROWS_AS(canonical_form(gen::petersen(), small), Error);
  CHECK(canonical_form(gen::edgeless(1)).certificate == "@");
}
