#include <doctest.h>

#include <numeric>

#include "srgddg/coclique.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/exact.hpp"
#include "srgddg/galois.hpp"
#include "srgddg/theory.hpp"

using namespace srgddg;
using namespace srgddg::theory;

namespace {

// Independent feasibility test: rational parameter formulas, the SRG
// counting identity, and eigenvalue multiplicities from the two trace
// equations f + g = v - 1 and k + f r + g s = 0.
bool feasible_by_hand(std::int64_t n, std::int64_t s) {
  const std::int64_t t = -s;
  if ((t * (n * n - 1)) % (n + s) || (t * (n - 1)) % (n + s) || (t * (n - 1) * (n + s)) % n) return false;
  const std::int64_t v = t * (n * n - 1) / (n + s), k = t * n, lam = t * (n + s);
  if (k * (k - lam - 1) != lam * (v - k - 1)) return false;
  const std::int64_t r = t;  // lambda = mu gives eigenvalues +-sqrt(k - mu)
  if (r * r != k - lam) return false;
  // f r - f s = -k - (v-1) s
  const std::int64_t num = -k - (v - 1) * s;
  return num % (r - s) == 0 && num / (r - s) >= 0 && v - 1 - num / (r - s) >= 0;
}

const CaseMatch* accepted(const std::vector<CaseMatch>& ms) {
  const CaseMatch* found = nullptr;
  for (const auto& m : ms)
    if (m.verdict == Verdict::Accepted) {
      REQUIRE(found == nullptr);
      found = &m;
    }
  return found;
}

}  // namespace

TEST_CASE("family formulas") {
  auto f = family_from(4, -2).value();
  CHECK(f.m == 3);
  CHECK(f.srg.v == 15);
  CHECK(f.srg.k == 8);
  CHECK(f.srg.lambda == 4);
  CHECK(f.ddg == DdgParams{12, 6, 2, 3, 3, 4});
  auto g = family_from(9, -3).value();
  CHECK(g.srg.v == 40);
  CHECK(g.ddg == DdgParams{36, 24, 15, 16, 4, 9});
  auto h = family_from(8, -4).value();
  CHECK(h.srg.v == 63);
  CHECK(h.ddg == DdgParams{56, 28, 12, 14, 7, 8});
  CHECK_FALSE(family_from(5, -2).ok());
  CHECK_THROWS_AS(family_from(2, -2), Error);
  CHECK_THROWS_AS(family_from(5, -1), Error);
  CHECK(family_of_ddg(DdgParams{36, 24, 15, 16, 4, 9})->n == 9);
  CHECK_FALSE(family_of_ddg(DdgParams{6, 2, 1, 0, 2, 3}).has_value());
}

TEST_CASE("s = -2 admits only n = 4 up to 50") {
  std::vector<std::int64_t> by_hand, engine;
  for (std::int64_t n = 3; n <= 50; ++n)
    if (feasible_by_hand(n, -2)) by_hand.push_back(n);
  for (const auto& row : enumerate_feasible(-2, -2, 50)) engine.push_back(row.family.n);
  CHECK(by_hand == std::vector<std::int64_t>{4});
  CHECK(engine == by_hand);
}

TEST_CASE("engine agrees with the hand check over a range of s") {
  for (std::int64_t s = -12; s <= -2; ++s) {
    std::vector<std::int64_t> by_hand, engine;
    for (std::int64_t n = -s + 1; n <= 400; ++n)
      if (feasible_by_hand(n, s)) by_hand.push_back(n);
    for (const auto& row : enumerate_feasible(s, s, 400)) engine.push_back(row.family.n);
    CHECK(engine == by_hand);
  }
}

TEST_CASE("s = -6") {
  auto rows = enumerate_feasible(-6, -6, 40);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].family.n == 9);
  CHECK_FALSE(rows[0].handshake_ok);
  CHECK(rows[1].family.n == 12);
  CHECK(rows[1].handshake_ok);
  CHECK(rows[1].family.ddg == DdgParams{132, 66, 30, 33, 11, 12});
  CHECK(rows[1].family.srg.v == 143);
  CHECK(rows[1].family.srg.k == 72);
  CHECK(rows[1].family.srg.lambda == 36);
  CHECK(rows[2].family.ddg == DdgParams{252, 210, 174, 175, 7, 36});
  CHECK(rows[2].family.srg.v == 259);
  CHECK(rows[2].family.srg.k == 216);
  CHECK(rows[2].family.srg.lambda == 180);
  for (const auto& r : rows) CHECK_FALSE(r.prime_power.has_value());
}

TEST_CASE("prime-power resolution") {
  auto check = [](std::int64_t n, std::int64_t s, std::int64_t q, std::int64_t d) {
    auto r = resolve_prime_power(family_from(n, s).value());
    REQUIRE(r.ok());
    CHECK(r.value().q == q);
    CHECK(r.value().d == d);
  };
  check(4, -2, 2, 2);
  check(9, -3, 3, 2);
  check(8, -4, 2, 3);
  check(16, -4, 4, 2);
  check(27, -9, 3, 3);
  CHECK_FALSE(resolve_prime_power(family_from(12, -6).value()).ok());
  CHECK(prime_power(64) == std::make_pair<std::int64_t, std::int64_t>(2, 6));
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  // every feasible row with a prime-power -s resolves without inconsistency
  for (const auto& row : enumerate_feasible(-32, -2, 2000))
    if (prime_power(-row.family.s)) CHECK(row.prime_power.has_value());
}

TEST_CASE("punctured spectrum") {
  auto p = make_srg_params(40, 27, 18, 18).value();
  auto ps = punctured_spectrum(p).value();
  CHECK(ps.c == 4);
  // f = 15, g = 24; the entries sum to zero as a trace must
  CHECK(ps.entries == std::vector<exact::Eigenpair>{{24, 1}, {3, 12}, {0, 3}, {-3, 20}});
  CHECK(ps.total_multiplicity() == 36);
  CHECK(ps.four_distinct);

  // On the actual graph minus an actual Hoffman coclique.
  Graph g = galois::symplectic_complement(2, galois::FiniteField(3, 1));
  auto cs = hoffman_cocliques(g, p, CocliqueQuery{std::nullopt, CocliqueMode::First});
  REQUIRE(cs.sets.size() == 1);
  Graph h = induced_subgraph(g, cs.sets[0].complement());
  auto spec = exact::integral_spectrum(exact::IntMatrix::adjacency(h)).value();
  CHECK(spec == ps.as_spectrum());

  CHECK_FALSE(punctured_spectrum(make_srg_params(10, 6, 3, 4).value()).ok());
}

TEST_CASE("DDG spectrum data") {
  auto ds = ddg_spectrum(DdgParams{36, 24, 15, 16, 4, 9});
  CHECK(ds.a == 3);
  CHECK(ds.b == 0);
  CHECK(ds.f_sum == 32);
  CHECK(ds.g_sum == 3);
  CHECK(ds.eigenvalues() == std::vector<std::int64_t>{24, 3, 0, -3});
  CHECK_THROWS_AS(ddg_spectrum(DdgParams{6, 1, 2, 0, 2, 3}), Error);
  CHECK(trace_bound_holds(DdgParams{6, 2, 1, 0, 2, 3}, 2, DdgMultiplicities{2, 2, 0, 1}));
  CHECK_FALSE(trace_bound_holds(DdgParams{6, 2, 1, 0, 2, 3}, 3, DdgMultiplicities{2, 2, 0, 1}));
}

TEST_CASE("table engine on SRG(40,27,18,18)") {
  auto ms = match_cases(make_srg_params(40, 27, 18, 18).value());
  CHECK(ms.size() == 10);
  const CaseMatch* a = accepted(ms);
  REQUIRE(a != nullptr);
  CHECK(a->case_id == "coincidence-main");
  CHECK(a->m == 4);
  CHECK(a->n == 9);
  CHECK(a->K == 24);
  CHECK(a->lambda1 == 15);
  CHECK(a->lambda2 == 16);
}

TEST_CASE("table engine on SRG(27,16,10,8)") {
  auto ms = match_cases(make_srg_params(27, 16, 10, 8).value());
  CHECK(accepted(ms) == nullptr);
  bool divisibility = false;
  for (const auto& m : ms) {
    if (m.case_id == "case-5") {
      CHECK(m.filter == "divisibility");
      CHECK(m.reason == "m = 5 does not divide V = v - c = 24");
    }
    if (m.case_id == "case-2") CHECK(m.filter == "assignment");
    divisibility |= m.filter == "divisibility";
    CHECK(m.verdict != Verdict::OpenByFilters);
  }
  CHECK(divisibility);
}

TEST_CASE("table engine on SRG(9,4,1,2)") {
  auto ms = match_cases(make_srg_params(9, 4, 1, 2).value());
  CHECK(accepted(ms) == nullptr);
  for (const auto& m : ms) {
    if (m.case_id == "case-4") {
      CHECK(m.filter == "divisibility");
      CHECK(m.reason == "m = 5 does not divide V = v - c = 6");
    }
    if (m.case_id == "case-8") {
      // The arithmetic allows DDG(6,2,1,0;2,3), and the 6-cycle realizes it.
      CHECK(m.verdict == Verdict::OpenByFilters);
      CHECK(m.m == 2);
      CHECK(m.n == 3);
      CHECK(m.lambda1 == 1);
      CHECK(m.lambda2 == 0);
    }
  }
}

TEST_CASE("table engine accepts every handshake-feasible family member") {
  for (const auto& row : enumerate_feasible(-10, -2, 300)) {
    auto ms = match_cases(row.family.srg);
    const CaseMatch* a = accepted(ms);
    CHECK((a != nullptr) == row.handshake_ok);
    if (a) {
      CHECK(a->V == row.family.ddg.V);
      CHECK(a->K == row.family.ddg.K);
      CHECK(a->lambda1 == row.family.ddg.lambda1);
      CHECK(a->lambda2 == row.family.ddg.lambda2);
      CHECK(a->m == row.family.ddg.m);
    }
  }
  CHECK_THROWS_AS(match_cases(make_srg_params(10, 6, 3, 4).value()), Error);
}
