#pragma once

#include <string>
#include <vector>

#include "srgddg/graph.hpp"

namespace srgddg {

struct CanonicalForm {
  /// graph6 of the canonically relabeled graph; equal iff isomorphic.
  std::string certificate;
  /// labeling[i] = original vertex placed at canonical position i.
  std::vector<int> labeling;
  std::size_t leaves = 0;
  std::size_t automorphisms_found = 0;
};

struct IsoOptions {
  int size_cap = 512;
};

/// Individualization-refinement from the uniform colouring: equitable
/// refinement, target cell = first smallest non-singleton, orbit pruning
/// with automorphisms found along the way. Leaves are ordered by their
/// refinement trace and then by the relabeled adjacency matrix; the least
/// leaf wins. Throws Error(SizeCap) above the cap.
CanonicalForm canonical_form(const Graph& g, const IsoOptions& opts = {});

bool are_isomorphic(const Graph& a, const Graph& b, const IsoOptions& opts = {});

}  // namespace srgddg
