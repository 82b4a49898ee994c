#include "srgddg/coclique.hpp"

#include <algorithm>
#include <chrono>

#include "srgddg/errors.hpp"

namespace srgddg {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const CocliqueQuery& q) : limit_(q.node_budget) {
    if (q.time_budget_seconds)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*q.time_budget_seconds));
  }

  /// Counts one node; false once a limit is hit.
  bool tick() {
    ++nodes_;
    if (nodes_ > limit_) exceeded_ = true;
    if (deadline_ && (nodes_ & 1023U) == 0 && Clock::now() > *deadline_) exceeded_ = true;
    return !exceeded_;
  }
  std::uint64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }

 private:
  std::uint64_t limit_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

// Greedy cover of `cand` by cliques; an independent set meets each at most once.
std::size_t clique_cover_bound(const Graph& g, Bitset cand) {
  std::size_t cliques = 0;
  while (cand.any()) {
    ++cliques;
    const std::size_t v = cand.first();
    cand.reset(v);
    Bitset common = cand & g.neighbors(static_cast<int>(v));
    while (common.any()) {
      const std::size_t u = common.first();
      cand.reset(u);
      common.reset(u);
      common &= g.neighbors(static_cast<int>(u));
    }
  }
  return cliques;
}

struct ExactSizeSearch {
  const Graph& g;
  std::size_t target;
  bool stop_at_first;
  Budget budget;
  std::vector<VertexSet> found;
  std::vector<int> current;

  void run(const Bitset& cand) {
    if (current.size() == target) {
      found.push_back(Bitset::from_members(static_cast<std::size_t>(g.order()), current));
      return;
    }
    if (current.size() + cand.count() < target) return;
    if (current.size() + clique_cover_bound(g, cand) < target) return;
    Bitset rest = cand;
    for (std::size_t v = rest.first(); v != Bitset::npos; v = rest.next(v + 1)) {
      if (!budget.tick()) return;
      rest.reset(v);
      if (current.size() + 1 + rest.count() < target) return;
      Bitset next = rest;
      next.subtract(g.neighbors(static_cast<int>(v)));
      current.push_back(static_cast<int>(v));
      run(next);
      current.pop_back();
      if (budget.exceeded() || (stop_at_first && !found.empty())) return;
    }
  }
};

struct MisSearch {
  const Graph& g;
  Budget budget;
  std::vector<int> current;
  std::vector<int> best;

  void run(Bitset cand) {
    if (!budget.tick()) return;
    if (cand.none()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + clique_cover_bound(g, cand) <= best.size()) return;
    // Branch vertex: maximum degree inside cand, ties to the lowest index.
    std::size_t pick = Bitset::npos;
    std::size_t pick_deg = 0;
    cand.for_each([&](std::size_t v) {
      const std::size_t d = g.neighbors(static_cast<int>(v)).intersect_count(cand);
      if (pick == Bitset::npos || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    if (pick_deg == 0) {
      // Candidates are pairwise non-adjacent: take them all.
      const auto size_before = current.size();
      cand.for_each([&](std::size_t v) { current.push_back(static_cast<int>(v)); });
      if (current.size() > best.size()) best = current;
      current.resize(size_before);
      return;
    }
    Bitset with = cand;
    with.reset(pick);
    with.subtract(g.neighbors(static_cast<int>(pick)));
    current.push_back(static_cast<int>(pick));
    run(std::move(with));
    current.pop_back();
    if (budget.exceeded()) return;
    cand.reset(pick);
    run(std::move(cand));
  }
};

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) { ok = ok && !g.neighbors(static_cast<int>(v)).intersects(s); });
  return ok;
}

CocliqueSearch cocliques_of_size(const Graph& g, std::int64_t target, const CocliqueQuery& q) {
  if (target < 1) throw Error(ErrorCode::InvalidArgument, "coclique target must be >= 1");
  ExactSizeSearch search{g, static_cast<std::size_t>(target), q.mode == CocliqueMode::First, Budget(q), {}, {}};
  search.run(Bitset::full(static_cast<std::size_t>(g.order())));
  CocliqueSearch out;
  out.sets = std::move(search.found);
  out.nodes = search.budget.nodes();
  out.budget_exceeded = search.budget.exceeded();
  return out;
}

CocliqueSearch hoffman_cocliques(const Graph& g, const SrgParams& p, const CocliqueQuery& q) {
  if (!p.c.is_integer() || p.c.num < 1)
    throw Error(ErrorCode::NoHoffmanBound, "Hoffman bound vs/(s-k) = " + p.c.to_string() + " is not a positive integer");
  if (q.target && *q.target != p.c.num)
    throw Error(ErrorCode::InvalidArgument, "target " + std::to_string(*q.target) + " differs from the Hoffman bound " +
                                                std::to_string(p.c.num));
  return cocliques_of_size(g, p.c.num, q);
}

MaxIndependentSet max_independent_set(const Graph& g, const CocliqueQuery& q) {
  MisSearch search{g, Budget(q), {}, {}};
  // Greedy seed so the bound bites from the first node.
  Bitset cand = Bitset::full(static_cast<std::size_t>(g.order()));
  while (cand.any()) {
    const std::size_t v = cand.first();
    search.best.push_back(static_cast<int>(v));
    cand.reset(v);
    cand.subtract(g.neighbors(static_cast<int>(v)));
  }
  search.run(Bitset::full(static_cast<std::size_t>(g.order())));
  std::sort(search.best.begin(), search.best.end());
  MaxIndependentSet out;
  out.set = Bitset::from_members(static_cast<std::size_t>(g.order()), search.best);
  out.nodes = search.budget.nodes();
  out.budget_exceeded = search.budget.exceeded();
  return out;
}

}  // namespace srgddg
