#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgddg/bitset.hpp"

namespace srgddg {

/// Immutable simple undirected graph on vertices 0..order-1 with one
/// adjacency bitset per vertex. Every constructor validates symmetry,
/// irreflexivity and row lengths.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(InvalidGraph) unless rows form a symmetric, loop-free
  /// adjacency structure.
  explicit Graph(std::vector<Bitset> rows, std::string label = {});

  /// Loops and repeated edges are rejected, not normalized.
  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges,
                          std::string label = {});

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  const Bitset& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).count()); }
  int common_neighbors(int u, int v) const {
    return static_cast<int>(neighbors(u).intersect_count(neighbors(v)));
  }
  std::int64_t edge_count() const;

  /// The common degree, or nullopt if the graph is not regular.
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  bool is_complete() const;
  bool is_edgeless() const;

  const std::string& label() const noexcept { return label_; }
  Graph with_label(std::string label) const;

  Graph complement() const;

  /// New vertex i is old vertex order[i]; `order` must be a permutation.
  Graph permuted(std::span<const int> order) const;

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.rows_ == b.rows_; }

 private:
  struct Unchecked {};
  Graph(Unchecked, std::vector<Bitset> rows, std::string label)
      : rows_(std::move(rows)), label_(std::move(label)) {}
  friend class GraphBuilder;

  std::vector<Bitset> rows_;
  std::string label_;
};

/// Mutable staging area for generators; build() hands the rows to an
/// immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }

  /// Throws on loops and on edges that are already present.
  void add_edge(int u, int v);

  Graph build(std::string label = {}) &&;

 private:
  std::vector<Bitset> rows_;
};

/// Subgraph induced on `keep`; vertices renumbered by ascending original index.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Lexicographic product g1[g2]: vertex (x1, x2) has index x1 * order(g2) + x2.
Graph composition(const Graph& g1, const Graph& g2);

namespace gen {

/// Outer 5-cycle 0..4, inner pentagram 5..9, spoke i -- i+5.
Graph petersen();
/// Line graph of K_m; vertices are the 2-subsets of {0..m-1} in lexicographic order.
Graph triangular(int m);
/// Rook's graph K_a x K_b; vertex (i, j) has index i * b + j.
Graph grid(int a, int b);
Graph complete(int n);
Graph edgeless(int n);
Graph cycle(int n);
Graph path(int n);
/// Circular ladder C_n x K_2; outer cycle 0..n-1, inner cycle n..2n-1.
Graph prism(int n);

/// Generator dispatch by name: petersen, triangular, grid, complete,
/// edgeless, cycle, path, prism. Throws Error(UnknownGenerator) or
/// Error(InvalidArgument) on bad names / sizes.
Graph named(std::string_view name, std::span<const int> args);

}  // namespace gen

}  // namespace srgddg
