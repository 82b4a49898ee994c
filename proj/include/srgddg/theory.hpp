#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srgddg/exact.hpp"
#include "srgddg/recognize.hpp"
#include "srgddg/result.hpp"

namespace srgddg::theory {

/// The (n, s) family: an SRG with a Hoffman coclique whose removal leaves a
/// proper DDG with classes of size n, and the DDG itself.
///   SRG: v = (-s)(n^2-1)/(n+s), k = (-s)n, lambda = mu = (-s)(n+s)
///   DDG: m = (-s)(n-1)/(n+s), V = nm, K = (-s)(n-1),
///        lambda1 = (-s)(n+s-1), lambda2 = (-s)(n-1)(n+s)/n
struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t m = 0;
  SrgParams srg;
  DdgParams ddg;
};

struct Infeasible {
  std::string reason;
};

/// Throws Error(InvalidArgument) unless n >= 2, s <= -2, n + s > 0.
Result<FamilyParams, Infeasible> family_from(std::int64_t n, std::int64_t s);

/// Recovers (n, s) from DDG parameters of the family pattern, if they are.
std::optional<FamilyParams> family_of_ddg(const DdgParams& p);

/// Each class of a family DDG induces an (n+s)-regular graph on n vertices.
bool handshake_ok(const FamilyParams& fp);

struct PrimePowerResolution {
  std::int64_t q = 0;
  std::int64_t d = 0;  // s = -q^(d-1), n = q^d
};

struct NotPrimePower {
  std::string reason;
};

/// If -s is a prime power, n must be q^d with -s = q^(d-1), q = n/(-s).
/// Throws Error(Inconsistent) if -s is a prime power but n is not of that
/// form (impossible for a feasible family).
Result<PrimePowerResolution, NotPrimePower> resolve_prime_power(const FamilyParams& fp);

/// Spectrum of an SRG with a Hoffman coclique of size c removed:
/// (k+s)^1, r^(f-c+1), (r+s)^(c-1), s^(g-c). Entries are kept in that order
/// even when values coincide or a multiplicity is zero.
struct PuncturedSpectrum {
  std::vector<exact::Eigenpair> entries;
  std::int64_t c = 0;
  bool four_distinct = false;  // c < g

  std::int64_t total_multiplicity() const;
  /// Merged, zero multiplicities dropped, sorted descending.
  exact::Spectrum as_spectrum() const;
};

struct NoHoffmanBound {
  std::string reason;
};

Result<PuncturedSpectrum, NoHoffmanBound> punctured_spectrum(const SrgParams& p);

/// DDG eigenvalue data: K, +-sqrt(K - lambda1), +-sqrt(K^2 - lambda2 V),
/// with f1 + f2 = m(n-1) and g1 + g2 = m - 1.
struct DdgSpectrum {
  std::int64_t K = 0;
  std::int64_t a_squared = 0;  // K - lambda1
  std::int64_t b_squared = 0;  // K^2 - lambda2 V
  std::optional<std::int64_t> a;  // set when a_squared is a perfect square
  std::optional<std::int64_t> b;
  std::int64_t f_sum = 0;
  std::int64_t g_sum = 0;

  bool integral() const noexcept { return a.has_value() && b.has_value(); }
  /// Distinct eigenvalues (descending), available when integral().
  std::vector<std::int64_t> eigenvalues() const;
};

/// Throws Error(InvalidArgument) with "NegativeDiscriminant" when
/// K < lambda1 or K^2 < lambda2 V.
DdgSpectrum ddg_spectrum(const DdgParams& dp);

struct DdgMultiplicities {
  std::int64_t f1 = 0, f2 = 0, g1 = 0, g2 = 0;
  friend bool operator==(const DdgMultiplicities&, const DdgMultiplicities&) = default;
};

/// Every (f1, f2, g1, g2) with the two sum constraints whose multiset
/// {K^1, a^f1, (-a)^f2, b^g1, (-b)^g2} equals `spec`.
std::vector<DdgMultiplicities> match_ddg_spectrum(const exact::Spectrum& spec, const DdgParams& dp);

/// 0 <= K + (g1 - g2) b <= m(n - 1).
bool trace_bound_holds(const DdgParams& dp, std::int64_t b, const DdgMultiplicities& mult);

enum class Verdict { Accepted, OpenByFilters, Rejected };
std::string to_string(Verdict v);

/// One way of matching the punctured spectrum to a DDG spectrum with one
/// vanishing multiplicity (cases 1-8) or with a merged zero eigenvalue
/// (coincidence cases, r + s = 0).
struct CaseMatch {
  std::string case_id;
  Verdict verdict = Verdict::Rejected;
  std::string filter;  // stage that rejected, or "all" when none did
  std::string reason;
  std::optional<std::int64_t> K, V, lambda1, lambda2, m, n;
  std::optional<std::int64_t> f1, f2, g1, g2;
};

/// Runs all eight single-vanishing cases and both coincidence cases through
/// the arithmetic filters (integrality, divisibility, trace bound, class
/// handshake, design integrality). Survivors of the main coincidence case
/// are Accepted; survivors of any other case are OpenByFilters because
/// excluding them needs structural arguments the filters do not encode.
/// Throws Error(NoHoffmanBound) if c is not a positive integer.
std::vector<CaseMatch> match_cases(const SrgParams& p);

struct FeasibleRow {
  FamilyParams family;
  bool handshake_ok = false;
  std::optional<PrimePowerResolution> prime_power;
  std::string prime_power_note;
};

/// All (n, s) with s_min <= s <= s_max <= -2 and -s < n <= n_max for which
/// family_from succeeds, sorted by s descending then n ascending.
std::vector<FeasibleRow> enumerate_feasible(std::int64_t s_min, std::int64_t s_max, std::int64_t n_max);

/// Prime power test; returns (p, e) with x = p^e.
std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t x);

}  // namespace srgddg::theory
