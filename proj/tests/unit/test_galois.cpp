#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "srgddg/coclique.hpp"
#include "srgddg/designs.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/galois.hpp"
#include "srgddg/recognize.hpp"

using namespace srgddg;
using namespace srgddg::galois;

TEST_CASE("finite field axioms hold exhaustively") {
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    FiniteField f(p, e);
    const Element q = f.order();
    CHECK(q == static_cast<Element>(std::pow(p, e)));
    for (Element a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Element b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (a != 0 && b != 0) CHECK(f.mul(a, b) != 0);
      }
    }
    // distributivity on a sample
    for (Element a = 0; a < q; a += 1 + q / 5)
      for (Element b = 0; b < q; b += 1 + q / 7)
        for (Element c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
  CHECK_THROWS_AS(FiniteField(4, 1), Error);
  CHECK_THROWS_AS(FiniteField(2, 17), Error);
  CHECK_THROWS_AS(FiniteField(2, 2).inv(0), Error);
}

TEST_CASE("projective points") {
  FiniteField f(3, 1);
  auto pts = projective_points(f, 4);
  CHECK(pts.size() == 40);
  CHECK(pts.front() == std::vector<Element>{0, 0, 0, 1});
  CHECK(pts.back() == std::vector<Element>{1, 2, 2, 2});
}

TEST_CASE("symplectic complements are the expected SRGs") {
  struct Row {
    int d;
    unsigned p, e;
    oracle::SrgTuple want;
  };
  for (const Row& r : {Row{2, 2, 1, {15, 8, 4, 4}}, Row{2, 3, 1, {40, 27, 18, 18}}, Row{3, 2, 1, {63, 32, 16, 16}},
                       Row{2, 2, 2, {85, 64, 48, 48}}}) {
    FiniteField f(r.p, r.e);
    Graph g = symplectic_complement(r.d, f);
    CHECK(oracle::srg_tuple(g) == r.want);
    // Every maximal totally isotropic subspace is a Hoffman coclique.
    const VertexSet lag = standard_lagrangian(r.d, f);
    CHECK(is_independent(g, lag));
    auto sp = srg_params(g).value();
    std::int64_t q = f.order(), size = 0, power = 1;
    for (int i = 0; i < r.d; ++i, power *= q) size += power;
    CHECK(static_cast<std::int64_t>(lag.count()) == size);
    CHECK(sp.c == Fraction::make(size, 1));
  }
  CHECK_THROWS_AS(symplectic_complement(1, FiniteField(2, 1)), Error);
  CHECK_THROWS_AS(symplectic_complement(3, FiniteField(3, 1), 100), Error);
}

TEST_CASE("coclique search finds cocliques of exactly the Hoffman size") {
  Graph g = symplectic_complement(2, FiniteField(2, 1));
  auto sp = srg_params(g).value();
  auto res = hoffman_cocliques(g, sp);
  CHECK(res.sets.size() == 15);
  for (const auto& s : res.sets) CHECK(s.count() == 3);
  auto mis = max_independent_set(g);
  CHECK(mis.set.count() == 3);
}

TEST_CASE("hyperplane designs of projective spaces") {
  SymmetricDesign fano = pg_hyperplane_design(3, FiniteField(2, 1));
  CHECK(fano.points() == 7);
  CHECK(fano.block_size() == 3);
  CHECK(fano.lambda() == 1);
  CHECK_FALSE(verify_design(fano).has_value());
  SymmetricDesign pg33 = pg_hyperplane_design(3, FiniteField(3, 1));
  CHECK(pg33.points() == 13);
  CHECK(pg33.block_size() == 4);
  CHECK_FALSE(verify_design(pg33).has_value());
  SymmetricDesign pg42 = pg_hyperplane_design(4, FiniteField(2, 1));
  CHECK(pg42.points() == 15);
  CHECK(pg42.block_size() == 7);
  CHECK(pg42.lambda() == 3);
  CHECK_FALSE(verify_design(pg42).has_value());
}
