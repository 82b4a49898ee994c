#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srgddg/designs.hpp"
#include "srgddg/graph.hpp"
#include "srgddg/recognize.hpp"

namespace srgddg {

/// Witness that gamma splits as a Hoffman coclique C plus a DDG whose
/// classes see C through the blocks of a symmetric design.
///
/// Numbering: `coclique` is in gamma's numbering. `delta` is the subgraph on
/// the other vertices, renumbered by ascending gamma index (`delta_vertices`
/// maps back). `partition` lives on delta. Design point j is the j-th
/// smallest member of C; blocks are sorted lexicographically and class i is
/// glued to block phi[i].
struct Decomposition {
  VertexSet coclique;
  std::vector<int> delta_vertices;
  Graph delta;
  CanonicalPartition partition;
  DdgParams ddg;
  SymmetricDesign design;
  std::vector<int> phi;
  std::int64_t n = 0;
  std::int64_t s = 0;
  QuotientMatrix quotient;
};

/// Glues design points V..V+m-1 onto delta: x in class i is adjacent to
/// point V+y iff y is in block phi[i]. The result is re-checked with
/// srg_params before it is returned.
///
/// Throws Error with ParameterMismatch (delta/partition not a DDG of the
/// family pattern), DesignMismatch, PhiNotBijective or ConstructionFailed.
Graph construct_gamma(const Graph& delta, const CanonicalPartition& partition, const SymmetricDesign& design,
                      const std::vector<int>& phi);

struct DecomposeOptions {
  std::uint64_t node_budget = 100'000'000;
  /// Stop after the first decomposition found.
  bool first_only = false;
  /// Worker threads over cocliques; results are identical for any value.
  unsigned threads = 1;
};

struct OutsidePattern {
  VertexSet coclique;
  DdgParams params;
};

struct DecomposeResult {
  /// Sorted by coclique, then by partition.
  std::vector<Decomposition> decompositions;
  std::size_t cocliques_examined = 0;
  /// Hoffman cocliques whose complement is a proper DDG that is not of the
  /// family pattern (so no design can be attached).
  std::vector<OutsidePattern> outside_pattern;
  std::vector<std::string> diagnostics;
  bool budget_exceeded = false;
};

/// Every Hoffman coclique C for which gamma minus C is a family DDG, each
/// validated by rebuilding gamma with construct_gamma. Throws
/// Error(InvalidArgument) if gamma is not a primitive SRG and
/// Error(NoHoffmanBound) if c is not integral.
DecomposeResult decompose(const Graph& gamma, const DecomposeOptions& opts = {});

/// gamma relabeled so delta vertices come first (ascending) and C last
/// (ascending): the numbering construct_gamma produces.
Graph construction_order(const Graph& gamma, const Decomposition& dec);

struct StructureViolation {
  std::string what;
};

/// Checks on gamma itself: every vertex of class i sees exactly block
/// phi[i] in C; every z in C contains or misses each class whole; every z in
/// C has (-s)n neighbours forming exactly -s classes.
std::optional<StructureViolation> verify_coclique_structure(const Graph& gamma, const Decomposition& dec);

/// Design with points = classes and one block per z in C (ascending):
/// the classes inside the neighbourhood of z. Isomorphic to dual(design).
SymmetricDesign extract_dual_design(const Graph& gamma, const Decomposition& dec);

}  // namespace srgddg
