#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "srgddg/exact.hpp"
#include "srgddg/galois.hpp"
#include "srgddg/recognize.hpp"
#include "srgddg/theory.hpp"

using namespace srgddg;

namespace {

void check_srg_matches_oracle(const Graph& g) {
  auto want = oracle::srg_tuple(g);
  auto got = srg_params(g);
  REQUIRE(want.has_value());
  REQUIRE(got.ok());
  CHECK(got.value().v == want->v);
  CHECK(got.value().k == want->k);
  CHECK(got.value().lambda == want->lambda);
  CHECK(got.value().mu == want->mu);
}

}  // namespace

TEST_CASE("SRG parameters agree with brute-force counting") {
  check_srg_matches_oracle(gen::petersen());
  check_srg_matches_oracle(gen::triangular(6));
  check_srg_matches_oracle(gen::grid(6, 6));
  check_srg_matches_oracle(gen::grid(3, 3));
  check_srg_matches_oracle(galois::symplectic_complement(2, galois::FiniteField(3, 1)));
}

TEST_CASE("derived SRG data") {
  auto p = make_srg_params(15, 8, 4, 4).value();
  CHECK(p.r == 2);
  CHECK(p.s == -2);
  CHECK(p.f == 5);
  CHECK(p.g == 9);
  CHECK(p.c == Fraction{3, 1});
  auto q = make_srg_params(40, 27, 18, 18).value();
  CHECK(q.f == 15);
  CHECK(q.g == 24);
  CHECK(q.c == Fraction{4, 1});
  auto pet = make_srg_params(10, 3, 0, 1).value();
  CHECK(pet.c == Fraction{4, 1});
  CHECK(make_srg_params(36, 10, 4, 2).value().c == Fraction{6, 1});
  // f and g from the closed form agree with the spectrum of the actual graph
  auto spec = exact::integral_spectrum(exact::IntMatrix::adjacency(gen::grid(6, 6))).value();
  auto g66 = make_srg_params(36, 10, 4, 2).value();
  CHECK(spec.multiplicity_of(g66.r) == g66.f);
  CHECK(spec.multiplicity_of(g66.s) == g66.g);
}

TEST_CASE("infeasible and irrational parameter sets") {
  auto pent = make_srg_params(5, 2, 0, 1);
  REQUIRE_FALSE(pent.ok());
  CHECK(pent.error() == "eigenvalues are not integers");
  CHECK_FALSE(make_srg_params(10, 3, 1, 1).ok());  // k(k-lambda-1) != mu(v-k-1)
  auto not_srg = srg_params(gen::cycle(5));
  REQUIRE_FALSE(not_srg.ok());
  CHECK(not_srg.error().reason == NotSrg::Reason::IrrationalEigenvalues);
  CHECK(srg_params(gen::path(4)).error().reason == NotSrg::Reason::NotRegular);
  CHECK(srg_params(gen::complete(5)).error().reason == NotSrg::Reason::Complete);
  CHECK(srg_params(gen::prism(5)).error().reason == NotSrg::Reason::PairCount);
  auto pc = srg_params(gen::prism(5)).error();
  REQUIRE(pc.witness.has_value());
  auto [x, y] = *pc.witness;
  CHECK(x != y);
}

TEST_CASE("Deza parameters and the composition criterion") {
  // G1 with lambda = mu: G1[coclique] has counts k and lambda * |coclique|.
  auto d = deza_params(composition(galois::symplectic_complement(2, galois::FiniteField(2, 1)), gen::edgeless(3)));
  REQUIRE(d.ok());
  CHECK(d.value().b == d.value().k);
  CHECK(d.value().k == 24);
  CHECK(d.value().a == 12);
  // Petersen has lambda != mu, so its composition sees three counts.
  CHECK(deza_params(composition(gen::petersen(), gen::edgeless(3))).error().reason == NotDeza::Reason::TooManyCounts);
  CHECK_FALSE(deza_params(gen::prism(5)).ok());
}

TEST_CASE("DDG recognition on a composition") {
  // K3[3K1]: classes are the blocks of the composition.
  Graph g = composition(gen::complete(3), gen::edgeless(3));
  auto w = ddg_recognize(g);
  REQUIRE(w.ok());
  REQUIRE(w.value().size() == 1);
  const auto& p = w.value()[0].params;
  CHECK(p == DdgParams{9, 6, 6, 3, 3, 3});
  CHECK(w.value()[0].partition.classes[1].members() == std::vector<int>{3, 4, 5});
  CHECK(verify_ddg_partition(g, w.value()[0].partition).value() == p);
  auto q = quotient_matrix(g, w.value()[0].partition).value();
  CHECK(q.is_symmetric());
  CHECK(q.at(0, 0) == 0);
  CHECK(q.at(0, 1) == 3);
}

TEST_CASE("non-DDG inputs") {
  CHECK_FALSE(ddg_recognize(gen::cycle(5)).ok());
  CHECK(ddg_recognize(gen::petersen()).error().reason == NotDdg::Reason::NotTransitive);
  CHECK_FALSE(ddg_recognize(gen::prism(5)).ok());
}

// The 3x3 grid minus a transversal Hoffman coclique is a 6-cycle. With the
// two triples of alternate vertices as classes it is a proper DDG: same-class
// pairs share one neighbour, cross pairs share none.
TEST_CASE("grid(3,3) minus a transversal is a proper DDG outside the family") {
  Graph grid = gen::grid(3, 3);
  const int keep[] = {1, 2, 3, 5, 6, 7};  // drop (0,0), (1,1), (2,2)
  Graph h = induced_subgraph(grid, Bitset::from_members(9, keep));
  CHECK(oracle::isomorphic_brute(h, gen::cycle(6)));
  auto w = ddg_recognize(h);
  REQUIRE(w.ok());
  REQUIRE(w.value().size() == 1);
  CHECK(w.value()[0].params == DdgParams{6, 2, 1, 0, 2, 3});
  CHECK(w.value()[0].params.proper());
  CHECK_FALSE(theory::family_of_ddg(w.value()[0].params).has_value());
}

TEST_CASE("DDG spectrum relations on recognized DDGs") {
  for (const Graph& g : {composition(gen::complete(3), gen::edgeless(3)), gen::cycle(6),
                         composition(gen::complete(4), gen::edgeless(2))}) {
    auto w = ddg_recognize(g).value().front();
    auto spec = exact::integral_spectrum(exact::IntMatrix::adjacency(g)).value();
    auto ds = theory::ddg_spectrum(w.params);
    REQUIRE(ds.integral());
    for (const auto& e : spec.entries) {
      const auto& ev = ds.eigenvalues();
      CHECK(std::find(ev.begin(), ev.end(), e.value) != ev.end());
    }
    auto matches = theory::match_ddg_spectrum(spec, w.params);
    REQUIRE_FALSE(matches.empty());
    bool some_bound = false;
    for (const auto& m : matches) some_bound |= theory::trace_bound_holds(w.params, *ds.b, m);
    CHECK(some_bound);
  }
}
