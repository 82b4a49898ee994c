#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/exact.hpp"
#include "srgddg/galois.hpp"

using namespace srgddg;
using namespace srgddg::exact;

namespace {

// The first n+1 power sums of a spectrum of total multiplicity n fix it.
void check_against_traces(const Graph& g, std::size_t powers) {
  auto spec = integral_spectrum(IntMatrix::adjacency(g));
  REQUIRE(spec.ok());
  CHECK(spec.value().total_multiplicity() == g.order());
  auto traces = oracle::trace_powers(g, powers);
  for (std::size_t p = 0; p < powers; ++p) CHECK(spec.value().power_sum(static_cast<unsigned>(p)) == traces[p]);
}

}  // namespace

TEST_CASE("polynomial helpers") {
  IntPoly p = IntPoly::from_roots({{2, 1}, {-1, 2}});  // (x-2)(x+1)^2 = x^3 - 3x - 2
  CHECK(p.to_string() == "x^3 - 3x - 2");
  CHECK(p.evaluate(2) == 0);
  CHECK(p.evaluate(0) == -2);
  CHECK(p.divide_by_root(-1));
  CHECK(p == IntPoly::from_roots({{2, 1}, {-1, 1}}));
  CHECK_FALSE(p.divide_by_root(5));
  CHECK(IntPoly().to_string() == "0");
}

TEST_CASE("characteristic polynomial of the Petersen graph") {
  IntPoly cp = char_poly(IntMatrix::adjacency(gen::petersen()));
  CHECK(cp == IntPoly::from_roots({{3, 1}, {1, 5}, {-2, 4}}));
}

TEST_CASE("integral spectra agree with trace powers") {
  check_against_traces(gen::petersen(), 11);
  check_against_traces(gen::triangular(6), 16);
  check_against_traces(gen::grid(4, 4), 17);
  check_against_traces(gen::complete(7), 8);
  check_against_traces(gen::cycle(6), 7);
  check_against_traces(galois::symplectic_complement(2, galois::FiniteField(2, 1)), 16);
  check_against_traces(galois::symplectic_complement(2, galois::FiniteField(3, 1)), 11);
}

TEST_CASE("known spectra") {
  auto s15 = integral_spectrum(IntMatrix::adjacency(galois::symplectic_complement(2, galois::FiniteField(2, 1))));
  REQUIRE(s15.ok());
  CHECK(s15.value().to_string() == "8^1, 2^5, -2^9");
  auto e = integral_spectrum(IntMatrix::adjacency(gen::edgeless(3)));
  REQUIRE(e.ok());
  CHECK(e.value().entries == std::vector<Eigenpair>{{0, 3}});
}

TEST_CASE("non-integral spectrum keeps the split part") {
  auto c5 = integral_spectrum(IntMatrix::adjacency(gen::cycle(5)));
  REQUIRE_FALSE(c5.ok());
  CHECK(c5.error().integral_part.entries == std::vector<Eigenpair>{{2, 1}});
  // (x^2 + x - 1)^2
  CHECK(c5.error().unsplit_factor == IntPoly({1, -2, -1, 2, 1}));
}

TEST_CASE("rank matches a modular oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
    IntMatrix m(n);
    oracle::Matrix o(n, std::vector<std::int64_t>(n));
    const std::size_t hidden = static_cast<std::size_t>(trial % 3);  // force dependent rows
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        o[i][j] = i < hidden ? 0 : entry(rng);
        if (i + 1 == n && n > 2) o[i][j] = o[n - 2][j] * 2 - o[hidden][j];
        m(i, j) = static_cast<long>(o[i][j]);
      }
    CHECK(rank(m) == oracle::rank_mod_p(o, 1000000007));
  }
}

TEST_CASE("multiplicity equals corank of A - theta I") {
  for (const Graph& g : {gen::petersen(), gen::triangular(6), gen::grid(3, 3)}) {
    auto a = IntMatrix::adjacency(g);
    auto spec = integral_spectrum(a).value();
    for (const auto& e : spec.entries)
      CHECK(static_cast<std::int64_t>(a.dim() - rank(a.shifted(e.value))) == e.multiplicity);
  }
}

TEST_CASE("size cap and symmetry preconditions") {
  CHECK_THROWS_AS(integral_spectrum(IntMatrix(513)), Error);
  ExactOptions small;
  small.size_cap = 4;
  CHECK_THROWS_AS(char_poly(IntMatrix::identity(5), small), Error);
  IntMatrix asym(2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(integral_spectrum(asym), Error);
}
