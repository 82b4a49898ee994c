#include "srgddg/iso.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>

#include "srgddg/errors.hpp"
#include "srgddg/graph6.hpp"

namespace srgddg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

// Ordered partition: lab holds vertices, cells are maximal runs
// [start, cell_end[start]) and cell_start[pos] names the cell of a position.
struct Partition {
  std::vector<int> lab;
  std::vector<int> cell_start;
  std::vector<int> cell_end;  // valid at cell starts only

  bool discrete() const {
    for (std::size_t p = 0; p < lab.size(); p = static_cast<std::size_t>(cell_end[p]))
      if (cell_end[p] - static_cast<int>(p) > 1) return false;
    return true;
  }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Partition root;
    root.lab.resize(static_cast<std::size_t>(n_));
    std::iota(root.lab.begin(), root.lab.end(), 0);
    root.cell_start.assign(static_cast<std::size_t>(n_), 0);
    root.cell_end.assign(static_cast<std::size_t>(n_), n_);
    const std::uint64_t h = refine(root, {0});
    std::vector<std::uint64_t> traces{h};
    std::vector<int> path;
    descend(root, traces, path, Cmp::Equal, true);

    CanonicalForm out;
    out.labeling = best_lab_;
    out.certificate = graph6::encode(g_.permuted(best_lab_));
    out.leaves = leaves_;
    out.automorphisms_found = generators_.size();
    return out;
  }

 private:
  enum class Cmp { Equal, Better };
  static constexpr int kNoJump = INT_MAX;

  // Splits cells until the partition is equitable. Splitters are processed
  // in queue order, fragments are ordered by neighbour count, so every step
  // depends only on positions and counts.
  std::uint64_t refine(Partition& p, std::vector<int> queue) {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    std::vector<char> queued(static_cast<std::size_t>(n_), 0);
    for (int s : queue) queued[static_cast<std::size_t>(s)] = 1;
    std::vector<int> counts(static_cast<std::size_t>(n_));
    std::size_t head = 0;
    while (head < queue.size()) {
      const int ws = queue[head++];
      queued[static_cast<std::size_t>(ws)] = 0;
      Bitset w(static_cast<std::size_t>(n_));
      for (int i = ws; i < p.cell_end[static_cast<std::size_t>(ws)]; ++i) w.set(static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)]));
      h = mix(h, static_cast<std::uint64_t>(ws));

      for (int start = 0; start < n_;) {
        const int end = p.cell_end[static_cast<std::size_t>(start)];
        if (end - start == 1) {
          start = end;
          continue;
        }
        bool uniform = true;
        for (int i = start; i < end; ++i) {
          const int v = p.lab[static_cast<std::size_t>(i)];
          counts[static_cast<std::size_t>(v)] = static_cast<int>(g_.neighbors(v).intersect_count(w));
          if (counts[static_cast<std::size_t>(v)] != counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(start)])]) uniform = false;
        }
        if (uniform) {
          start = end;
          continue;
        }
        auto first = p.lab.begin() + start;
        auto last = p.lab.begin() + end;
        std::sort(first, last, [&](int a, int b) {
          const int ca = counts[static_cast<std::size_t>(a)], cb = counts[static_cast<std::size_t>(b)];
          return ca != cb ? ca < cb : a < b;
        });
        // Carve fragments; remember the largest for the splitter queue.
        std::vector<std::pair<int, int>> frags;
        for (int i = start; i < end;) {
          int j = i + 1;
          while (j < end && counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(j)])] == counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])]) ++j;
          frags.emplace_back(i, j);
          h = mix(h, (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint64_t>(counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])]));
          i = j;
        }
        h = mix(h, static_cast<std::uint64_t>(frags.size()));
        std::size_t largest = 0;
        for (std::size_t f = 1; f < frags.size(); ++f)
          if (frags[f].second - frags[f].first > frags[largest].second - frags[largest].first) largest = f;
        const bool was_queued = queued[static_cast<std::size_t>(start)] != 0;
        for (std::size_t f = 0; f < frags.size(); ++f) {
          const auto [a, b] = frags[f];
          p.cell_end[static_cast<std::size_t>(a)] = b;
          for (int i = a; i < b; ++i) p.cell_start[static_cast<std::size_t>(i)] = a;
          if (queued[static_cast<std::size_t>(a)]) continue;
          if (was_queued || f != largest) {
            queued[static_cast<std::size_t>(a)] = 1;
            queue.push_back(a);
          }
        }
        start = end;
      }
    }
    return h;
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_size = INT_MAX;
    for (int start = 0; start < n_; start = p.cell_end[static_cast<std::size_t>(start)]) {
      const int size = p.cell_end[static_cast<std::size_t>(start)] - start;
      if (size > 1 && size < best_size) {
        best = start;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<Bitset> relabeled_rows(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    std::vector<Bitset> rows(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      g_.neighbors(lab[static_cast<std::size_t>(i)]).for_each([&](std::size_t u) {
        rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(pos[u]));
      });
    return rows;
  }

  static int compare_rows(const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& wa = a[i].words();
      const auto& wb = b[i].words();
      for (std::size_t j = 0; j < wa.size(); ++j)
        if (wa[j] != wb[j]) return wa[j] < wb[j] ? -1 : 1;
    }
    return 0;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // Maps lab_from[i] -> lab_to[i].
  void add_automorphism(const std::vector<int>& lab_from, const std::vector<int>& lab_to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[static_cast<std::size_t>(lab_from[static_cast<std::size_t>(i)])] = lab_to[static_cast<std::size_t>(i)];
    for (int v = 0; v < n_; ++v)
      if (gamma[static_cast<std::size_t>(v)] != v) {
        generators_.push_back(std::move(gamma));
        return;
      }
  }

  // Orbit representative per vertex under the generators fixing `path`.
  std::vector<int> orbits(const std::vector<int>& path) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int v : path)
        if (gamma[static_cast<std::size_t>(v)] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  // Returns the depth whose current child should be abandoned, or kNoJump.
  int descend(const Partition& p, std::vector<std::uint64_t>& traces, std::vector<int>& path, Cmp cmp,
              bool eq_first) {
    const std::size_t d = traces.size() - 1;
    if (have_best_ && cmp == Cmp::Equal) {
      if (d >= best_traces_.size() || traces[d] > best_traces_[d]) return kNoJump;
      if (traces[d] < best_traces_[d]) cmp = Cmp::Better;
    }
    if (have_best_ && eq_first && (d >= first_traces_.size() || traces[d] != first_traces_[d])) eq_first = false;

    if (p.discrete()) {
      ++leaves_;
      auto rows = relabeled_rows(p.lab);
      if (!have_best_) {
        have_best_ = true;
        first_traces_ = best_traces_ = traces;
        first_rows_ = best_rows_ = std::move(rows);
        first_lab_ = best_lab_ = p.lab;
        first_path_ = best_path_ = path;
        return kNoJump;
      }
      if (eq_first && traces.size() == first_traces_.size() && compare_rows(rows, first_rows_) == 0) {
        add_automorphism(first_lab_, p.lab);
        return divergence(path, first_path_);
      }
      if (cmp == Cmp::Equal && traces.size() == best_traces_.size()) {
        const int c = compare_rows(rows, best_rows_);
        if (c == 0) {
          add_automorphism(best_lab_, p.lab);
          return divergence(path, best_path_);
        }
        if (c > 0) return kNoJump;
      } else if (cmp == Cmp::Equal) {
        // Shorter trace sequences sort first.
        if (traces.size() > best_traces_.size()) return kNoJump;
      }
      best_traces_ = traces;
      best_rows_ = std::move(rows);
      best_lab_ = p.lab;
      best_path_ = path;
      return kNoJump;
    }

    const int start = target_cell(p);
    const int end = p.cell_end[static_cast<std::size_t>(start)];
    std::vector<int> cell(p.lab.begin() + start, p.lab.begin() + end);
    std::sort(cell.begin(), cell.end());

    std::vector<int> explored;
    std::size_t gens_seen = SIZE_MAX;
    std::vector<int> orb;
    for (int v : cell) {
      if (gens_seen != generators_.size()) {
        orb = orbits(path);
        gens_seen = generators_.size();
      }
      bool redundant = false;
      for (int u : explored)
        if (orb[static_cast<std::size_t>(u)] == orb[static_cast<std::size_t>(v)]) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      explored.push_back(v);

      Partition child = p;
      auto it = std::find(child.lab.begin() + start, child.lab.begin() + end, v);
      std::rotate(child.lab.begin() + start, it, it + 1);
      child.cell_end[static_cast<std::size_t>(start)] = start + 1;
      child.cell_end[static_cast<std::size_t>(start + 1)] = end;
      for (int i = start + 1; i < end; ++i) child.cell_start[static_cast<std::size_t>(i)] = start + 1;
      std::uint64_t h = mix(static_cast<std::uint64_t>(start), static_cast<std::uint64_t>(end - start));
      h = mix(h, refine(child, {start}));

      traces.push_back(h);
      path.push_back(v);
      const int jump = descend(child, traces, path, cmp, eq_first);
      traces.pop_back();
      path.pop_back();
      if (jump < static_cast<int>(d)) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::vector<std::uint64_t> first_traces_, best_traces_;
  std::vector<Bitset> first_rows_, best_rows_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const IsoOptions& opts) {
  if (g.order() > opts.size_cap)
    throw Error(ErrorCode::SizeCap, "canonical_form: order " + std::to_string(g.order()) + " exceeds cap " +
                                        std::to_string(opts.size_cap));
  if (g.order() == 0) return CanonicalForm{graph6::encode(g), {}, 0, 0};
  return Search(g).run();
}

bool are_isomorphic(const Graph& a, const Graph& b, const IsoOptions& opts) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    if (a.order() > opts.size_cap || b.order() > opts.size_cap)
      throw Error(ErrorCode::SizeCap, "are_isomorphic: order exceeds cap");
    return false;
  }
  return canonical_form(a, opts).certificate == canonical_form(b, opts).certificate;
}

}  // namespace srgddg
