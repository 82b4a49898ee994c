#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srgddg/bitset.hpp"
#include "srgddg/graph.hpp"
#include "srgddg/result.hpp"

namespace srgddg {

/// Reduced fraction with positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  bool is_integer() const noexcept { return den == 1; }
  std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Parameters of a strongly regular graph with integral eigenvalues
/// k > r > s, multiplicities f, g and Hoffman bound c = vs/(s-k).
struct SrgParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  std::int64_t r = 0, s = 0;
  std::int64_t f = 0, g = 0;
  Fraction c;

  /// Graph and complement both connected (0 < mu < k).
  bool primitive() const noexcept { return mu > 0 && mu < k; }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Derive r, s, f, g, c from (v, k, lambda, mu). Fails with a reason when
/// the tuple violates k(k-lambda-1) = mu(v-k-1), has irrational
/// eigenvalues, or non-integral multiplicities.
Result<SrgParams, std::string> make_srg_params(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                               std::int64_t mu);

struct NotSrg {
  enum class Reason { Complete, Edgeless, Disconnected, NotRegular, PairCount, IrrationalEigenvalues, Infeasible };
  Reason reason;
  /// First violating pair for PairCount, first vertex of a different degree
  /// for NotRegular.
  std::optional<std::pair<int, int>> witness;
  std::string message;
};

std::string to_string(NotSrg::Reason r);

/// Checks regularity and constant common-neighbour counts on adjacent and on
/// non-adjacent pairs with row popcounts.
Result<SrgParams, NotSrg> srg_params(const Graph& g);

struct DezaParams {
  std::int64_t v = 0, k = 0, b = 0, a = 0;  // b >= a
  friend bool operator==(const DezaParams&, const DezaParams&) = default;
};

struct NotDeza {
  enum class Reason { NotRegular, Complete, Edgeless, TooManyCounts };
  Reason reason;
  std::vector<std::int64_t> counts;  // distinct counts seen (first three)
  std::string message;
};

Result<DezaParams, NotDeza> deza_params(const Graph& g);

struct DdgParams {
  std::int64_t V = 0, K = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;

  bool proper() const noexcept { return m >= 2 && n >= 2 && lambda1 != lambda2; }
  std::string to_string() const;
  friend bool operator==(const DdgParams&, const DdgParams&) = default;
};

/// m disjoint classes of equal size n covering the vertex set, ordered by
/// smallest member.
struct CanonicalPartition {
  std::vector<VertexSet> classes;

  std::size_t class_count() const noexcept { return classes.size(); }
  /// class index per vertex
  std::vector<int> class_of() const;
  /// Throws Error(InvalidArgument) unless the classes partition 0..order-1.
  void validate(int order) const;
  friend bool operator==(const CanonicalPartition&, const CanonicalPartition&) = default;
};

struct DdgWitness {
  DdgParams params;
  CanonicalPartition partition;
};

struct NotDdg {
  enum class Reason { NotDeza, Improper, NotTransitive, UnequalClasses };
  Reason reason;
  std::string message;
};

std::string to_string(NotDdg::Reason r);

/// Every (parameters, canonical partition) pair under which g is a proper
/// divisible design graph. Both assignments of the two common-neighbour
/// counts to (lambda1, lambda2) are tried.
Result<std::vector<DdgWitness>, NotDdg> ddg_recognize(const Graph& g);

/// Checks a user-supplied partition directly: g must be regular and every
/// same-class pair must share lambda1, every cross pair lambda2.
Result<DdgParams, std::string> verify_ddg_partition(const Graph& g, const CanonicalPartition& p);

/// m x m matrix of row sums r_ij: neighbours in class j of a vertex of class i.
struct QuotientMatrix {
  std::size_t m = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }
  bool is_symmetric() const;
  /// All entries equal to `value`.
  bool is_constant(std::int64_t value) const;
  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;
};

struct NotEquitable {
  int vertex;
  std::size_t target_class;
  std::string message;
};

Result<QuotientMatrix, NotEquitable> quotient_matrix(const Graph& g, const CanonicalPartition& p);

}  // namespace srgddg
