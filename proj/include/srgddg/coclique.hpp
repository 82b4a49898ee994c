#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srgddg/bitset.hpp"
#include "srgddg/graph.hpp"
#include "srgddg/recognize.hpp"

namespace srgddg {

enum class CocliqueMode { First, All, Maximum };

struct CocliqueQuery {
  /// Required size; hoffman_cocliques always uses the Hoffman bound c and
  /// rejects a conflicting explicit target.
  std::optional<std::int64_t> target;
  CocliqueMode mode = CocliqueMode::All;
  std::uint64_t node_budget = 100'000'000;
  std::optional<double> time_budget_seconds;
};

struct CocliqueSearch {
  /// Sorted lexicographically by member list.
  std::vector<VertexSet> sets;
  std::uint64_t nodes = 0;
  /// Budget ran out; `sets` holds what was found so far.
  bool budget_exceeded = false;
};

/// Independent sets of exactly `target` vertices, enumerated in
/// lexicographic order with residual-size and clique-cover pruning. Mode
/// First stops after the first hit; All and Maximum enumerate everything.
CocliqueSearch cocliques_of_size(const Graph& g, std::int64_t target, const CocliqueQuery& q = {});

/// Hoffman cocliques of size c = vs/(s-k). Throws Error(NoHoffmanBound)
/// when c is not a positive integer.
CocliqueSearch hoffman_cocliques(const Graph& g, const SrgParams& p, const CocliqueQuery& q = {});

struct MaxIndependentSet {
  VertexSet set;
  std::uint64_t nodes = 0;
  /// `set` is the best found before the budget ran out, not proven maximum.
  bool budget_exceeded = false;
};

/// Branch and bound: branch on a maximum-degree candidate (ties to lowest
/// index), bound by a greedy clique cover of the candidates.
MaxIndependentSet max_independent_set(const Graph& g, const CocliqueQuery& q = {});

/// Every pair of members non-adjacent.
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace srgddg
