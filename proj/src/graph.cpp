#include "srgddg/graph.hpp"

#include <algorithm>
#include <string>

#include "srgddg/errors.hpp"

namespace srgddg {

namespace {

void check_vertex(int v, int order) {
  if (v < 0 || v >= order)
    throw Error(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " out of range for order " +
                                             std::to_string(order));
}

}  // namespace

Graph::Graph(std::vector<Bitset> rows, std::string label) : rows_(std::move(rows)), label_(std::move(label)) {
  const std::size_t n = rows_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (rows_[x].size() != n)
      throw Error(ErrorCode::InvalidGraph, "adjacency row " + std::to_string(x) + " has length " +
                                               std::to_string(rows_[x].size()) + ", expected " +
                                               std::to_string(n));
    if (rows_[x].test(x)) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(x));
  }
  for (std::size_t x = 0; x < n; ++x) {
    rows_[x].for_each([&](std::size_t y) {
      if (!rows_[y].test(x))
        throw Error(ErrorCode::InvalidGraph,
                    "asymmetric adjacency between " + std::to_string(x) + " and " + std::to_string(y));
    });
  }
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges, std::string label) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build(std::move(label));
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& r : rows_) twice += static_cast<std::int64_t>(r.count());
  return twice / 2;
}

std::optional<int> Graph::regular_degree() const {
  if (rows_.empty()) return std::nullopt;
  const int k = degree(0);
  for (int v = 1; v < order(); ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

bool Graph::is_connected() const {
  if (rows_.empty()) return true;
  Bitset seen(rows_.size());
  Bitset frontier(rows_.size());
  seen.set(0);
  frontier.set(0);
  while (frontier.any()) {
    Bitset next(rows_.size());
    frontier.for_each([&](std::size_t v) { next |= rows_[v]; });
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == rows_.size();
}

bool Graph::is_complete() const {
  for (int v = 0; v < order(); ++v)
    if (degree(v) != order() - 1) return false;
  return true;
}

bool Graph::is_edgeless() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Bitset& r) { return r.none(); });
}

Graph Graph::with_label(std::string label) const { return Graph(Unchecked{}, rows_, std::move(label)); }

Graph Graph::complement() const {
  std::vector<Bitset> rows;
  rows.reserve(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    Bitset r = rows_[v].complement();
    r.reset(v);
    rows.push_back(std::move(r));
  }
  return Graph(Unchecked{}, std::move(rows), label_.empty() ? std::string{} : "complement(" + label_ + ")");
}

Graph Graph::permuted(std::span<const int> order) const {
  const int n = this->order();
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "permutation length does not match graph order");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    check_vertex(order[static_cast<std::size_t>(i)], n);
    int& slot = inverse[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    if (slot != -1) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    slot = i;
  }
  std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    neighbors(order[static_cast<std::size_t>(i)]).for_each([&](std::size_t old) {
      rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(inverse[old]));
    });
  }
  return Graph(Unchecked{}, std::move(rows), label_);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    rows_[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
    });
  return out;
}

GraphBuilder::GraphBuilder(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative graph order");
  rows_.assign(static_cast<std::size_t>(order), Bitset(static_cast<std::size_t>(order)));
}

void GraphBuilder::add_edge(int u, int v) {
  check_vertex(u, order());
  check_vertex(v, order());
  if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw Error(ErrorCode::InvalidGraph, "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

Graph GraphBuilder::build(std::string label) && { return Graph(Graph::Unchecked{}, std::move(rows_), std::move(label)); }

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorCode::InvalidArgument, "vertex set does not belong to this graph");
  const std::vector<int> kept = keep.members();
  if (kept.empty()) throw Error(ErrorCode::InvalidArgument, "induced_subgraph: empty vertex set");
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) position[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Bitset nb = g.neighbors(kept[i]) & keep;
    nb.for_each([&](std::size_t y) {
      const int j = position[y];
      if (j > static_cast<int>(i)) b.add_edge(static_cast<int>(i), j);
    });
  }
  return std::move(b).build();
}

Graph composition(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  GraphBuilder b(n1 * n2);
  for (int x1 = 0; x1 < n1; ++x1) {
    for (int x2 = 0; x2 < n2; ++x2) {
      const int x = x1 * n2 + x2;
      for (int y1 = x1; y1 < n1; ++y1) {
        if (y1 == x1) {
          for (int y2 = x2 + 1; y2 < n2; ++y2)
            if (g2.adjacent(x2, y2)) b.add_edge(x, y1 * n2 + y2);
        } else if (g1.adjacent(x1, y1)) {
          for (int y2 = 0; y2 < n2; ++y2) b.add_edge(x, y1 * n2 + y2);
        }
      }
    }
  }
  std::string label;
  if (!g1.label().empty() && !g2.label().empty()) label = g1.label() + "[" + g2.label() + "]";
  return std::move(b).build(std::move(label));
}

namespace gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build("petersen");
}

Graph triangular(int m) {
  require(m >= 3, "triangular(m) requires m >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  const int n = static_cast<int>(pairs.size());
  GraphBuilder b(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      auto [a, c] = pairs[static_cast<std::size_t>(x)];
      auto [d, e] = pairs[static_cast<std::size_t>(y)];
      if (a == d || a == e || c == d || c == e) b.add_edge(x, y);
    }
  return std::move(b).build("triangular(" + std::to_string(m) + ")");
}

Graph grid(int a, int bcols) {
  require(a >= 1 && bcols >= 1, "grid(a, b) requires a, b >= 1");
  GraphBuilder b(a * bcols);
  for (int x = 0; x < a * bcols; ++x)
    for (int y = x + 1; y < a * bcols; ++y)
      if (x / bcols == y / bcols || x % bcols == y % bcols) b.add_edge(x, y);
  return std::move(b).build("grid(" + std::to_string(a) + "," + std::to_string(bcols) + ")");
}

Graph complete(int n) {
  require(n >= 1, "complete(n) requires n >= 1");
  GraphBuilder b(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) b.add_edge(x, y);
  return std::move(b).build("complete(" + std::to_string(n) + ")");
}

Graph edgeless(int n) {
  require(n >= 1, "edgeless(n) requires n >= 1");
  return GraphBuilder(n).build("edgeless(" + std::to_string(n) + ")");
}

Graph cycle(int n) {
  require(n >= 3, "cycle(n) requires n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build("cycle(" + std::to_string(n) + ")");
}

Graph path(int n) {
  require(n >= 1, "path(n) requires n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build("path(" + std::to_string(n) + ")");
}

Graph prism(int n) {
  require(n >= 3, "prism(n) requires n >= 3");
  GraphBuilder b(2 * n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
    b.add_edge(n + i, n + (i + 1) % n);
    b.add_edge(i, n + i);
  }
  return std::move(b).build("prism(" + std::to_string(n) + ")");
}

Graph named(std::string_view name, std::span<const int> args) {
  auto want = [&](std::size_t count) {
    require(args.size() == count, std::string(name) + " expects " + std::to_string(count) + " size argument(s)");
  };
  if (name == "petersen") {
    want(0);
    return petersen();
  }
  if (name == "triangular") {
    want(1);
    return triangular(args[0]);
  }
  if (name == "grid") {
    want(2);
    return grid(args[0], args[1]);
  }
  if (name == "complete") {
    want(1);
    return complete(args[0]);
  }
  if (name == "edgeless") {
    want(1);
    return edgeless(args[0]);
  }
  if (name == "cycle") {
    want(1);
    return cycle(args[0]);
  }
  if (name == "path") {
    want(1);
    return path(args[0]);
  }
  if (name == "prism") {
    want(1);
    return prism(args[0]);
  }
  throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
}

}  // namespace gen

}  // namespace srgddg
