#include "srgddg/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "srgddg/errors.hpp"

namespace srgddg {

namespace {

std::int64_t isqrt_exact(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

std::string pair_string(int x, int y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

}  // namespace

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / (g ? g : 1), den / (g ? g : 1)};
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Result<SrgParams, std::string> make_srg_params(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                               std::int64_t mu) {
  if (v < 2 || k < 1 || k >= v - 1) return std::string("need 1 <= k < v - 1");
  if (lambda < 0 || mu < 0) return std::string("negative lambda or mu");
  if (k * (k - lambda - 1) != mu * (v - k - 1)) return std::string("k(k-lambda-1) != mu(v-k-1)");
  const std::int64_t disc = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
  const std::int64_t root = isqrt_exact(disc);
  if (root < 0 || (lambda - mu + root) % 2 != 0) return std::string("eigenvalues are not integers");
  SrgParams p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.mu = mu;
  p.r = (lambda - mu + root) / 2;
  p.s = (lambda - mu - root) / 2;
  if (p.r == p.s) return std::string("r equals s");
  // f = (v - 1 - D)/2, g = (v - 1 + D)/2 with D = (2k + (v-1)(r+s))/(r-s).
  const std::int64_t d_num = 2 * k + (v - 1) * (p.r + p.s);
  const std::int64_t d_den = p.r - p.s;
  if (d_num % d_den != 0) return std::string("multiplicities are not integers");
  const std::int64_t d = d_num / d_den;
  if ((v - 1 - d) % 2 != 0) return std::string("multiplicities are not integers");
  p.f = (v - 1 - d) / 2;
  p.g = (v - 1 + d) / 2;
  if (p.f < 0 || p.g < 0) return std::string("negative multiplicity");
  p.c = Fraction::make(v * p.s, p.s - k);
  return p;
}

std::string to_string(NotSrg::Reason r) {
  switch (r) {
    case NotSrg::Reason::Complete: return "complete";
    case NotSrg::Reason::Edgeless: return "edgeless";
    case NotSrg::Reason::Disconnected: return "disconnected";
    case NotSrg::Reason::NotRegular: return "not-regular";
    case NotSrg::Reason::PairCount: return "pair-count";
    case NotSrg::Reason::IrrationalEigenvalues: return "irrational-eigenvalues";
    case NotSrg::Reason::Infeasible: return "infeasible";
  }
  return "unknown";
}

Result<SrgParams, NotSrg> srg_params(const Graph& g) {
  using R = NotSrg::Reason;
  const int n = g.order();
  if (n < 2 || g.is_complete()) return NotSrg{R::Complete, std::nullopt, "graph is complete"};
  if (g.is_edgeless()) return NotSrg{R::Edgeless, std::nullopt, "graph is edgeless"};
  const int k = g.degree(0);
  for (int x = 1; x < n; ++x)
    if (g.degree(x) != k)
      return NotSrg{R::NotRegular, std::make_pair(0, x),
                    "vertex " + std::to_string(x) + " has degree " + std::to_string(g.degree(x)) + ", vertex 0 has " +
                        std::to_string(k)};
  if (!g.is_connected()) return NotSrg{R::Disconnected, std::nullopt, "graph is disconnected"};

  int lambda = -1;
  int mu = -1;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int cn = g.common_neighbors(x, y);
      int& expected = g.adjacent(x, y) ? lambda : mu;
      if (expected < 0) {
        expected = cn;
      } else if (cn != expected) {
        return NotSrg{R::PairCount, std::make_pair(x, y),
                      std::string(g.adjacent(x, y) ? "adjacent" : "non-adjacent") + " pair " + pair_string(x, y) +
                          " has " + std::to_string(cn) + " common neighbours, expected " + std::to_string(expected)};
      }
    }
  }
  auto p = make_srg_params(n, k, lambda, mu);
  if (!p) {
    const bool irrational = p.error() == "eigenvalues are not integers";
    return NotSrg{irrational ? R::IrrationalEigenvalues : R::Infeasible, std::nullopt, p.error()};
  }
  return p.value();
}

Result<DezaParams, NotDeza> deza_params(const Graph& g) {
  using R = NotDeza::Reason;
  const int n = g.order();
  if (n < 2 || g.is_complete()) return NotDeza{R::Complete, {}, "graph is complete"};
  if (g.is_edgeless()) return NotDeza{R::Edgeless, {}, "graph is edgeless"};
  const auto k = g.regular_degree();
  if (!k) return NotDeza{R::NotRegular, {}, "graph is not regular"};
  std::vector<std::int64_t> seen;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const std::int64_t cn = g.common_neighbors(x, y);
      if (std::find(seen.begin(), seen.end(), cn) == seen.end()) {
        seen.push_back(cn);
        if (seen.size() > 2)
          return NotDeza{R::TooManyCounts, seen,
                         "pair " + pair_string(x, y) + " has a third distinct common-neighbour count " +
                             std::to_string(cn)};
      }
    }
  DezaParams d;
  d.v = n;
  d.k = *k;
  d.b = *std::max_element(seen.begin(), seen.end());
  d.a = *std::min_element(seen.begin(), seen.end());
  return d;
}

std::string DdgParams::to_string() const {
  std::ostringstream os;
  os << "(" << V << "," << K << "," << lambda1 << "," << lambda2 << ";" << m << "," << n << ")";
  return os.str();
}

std::vector<int> CanonicalPartition::class_of() const {
  std::size_t total = 0;
  for (const auto& c : classes) total = std::max(total, c.size());
  std::vector<int> out(total, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    classes[i].for_each([&](std::size_t v) { out[v] = static_cast<int>(i); });
  return out;
}

void CanonicalPartition::validate(int order) const {
  if (classes.empty()) throw Error(ErrorCode::InvalidArgument, "partition has no classes");
  Bitset seen(static_cast<std::size_t>(order));
  const std::size_t n = classes[0].count();
  for (const auto& c : classes) {
    if (c.size() != static_cast<std::size_t>(order))
      throw Error(ErrorCode::InvalidArgument, "partition class does not belong to this graph");
    if (c.count() != n) throw Error(ErrorCode::InvalidArgument, "partition classes have unequal sizes");
    if (c.intersects(seen)) throw Error(ErrorCode::InvalidArgument, "partition classes overlap");
    seen |= c;
  }
  if (seen.count() != static_cast<std::size_t>(order))
    throw Error(ErrorCode::InvalidArgument, "partition does not cover every vertex");
}

std::string to_string(NotDdg::Reason r) {
  switch (r) {
    case NotDdg::Reason::NotDeza: return "not-deza";
    case NotDdg::Reason::Improper: return "improper";
    case NotDdg::Reason::NotTransitive: return "not-transitive";
    case NotDdg::Reason::UnequalClasses: return "unequal-classes";
  }
  return "unknown";
}

Result<std::vector<DdgWitness>, NotDdg> ddg_recognize(const Graph& g) {
  auto deza = deza_params(g);
  if (!deza) return NotDdg{NotDdg::Reason::NotDeza, deza.error().message};
  const DezaParams d = deza.value();
  if (d.a == d.b)
    return NotDdg{NotDdg::Reason::Improper,
                  "every pair has " + std::to_string(d.a) + " common neighbours; the graph is strongly regular"};

  const int n = g.order();
  std::vector<DdgWitness> found;
  NotDdg failure{NotDdg::Reason::NotTransitive, ""};
  const std::pair<std::int64_t, std::int64_t> assignments[] = {{d.b, d.a}, {d.a, d.b}};
  for (auto [l1, l2] : assignments) {
    std::vector<Bitset> rel(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x) {
      rel[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(x));
      for (int y = x + 1; y < n; ++y)
        if (g.common_neighbors(x, y) == l1) {
          rel[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
          rel[static_cast<std::size_t>(y)].set(static_cast<std::size_t>(x));
        }
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      const Bitset& cls = rel[static_cast<std::size_t>(x)];
      cls.for_each([&](std::size_t y) {
        if (ok && !(rel[y] == cls)) {
          ok = false;
          failure = {NotDdg::Reason::NotTransitive,
                     "pairs with " + std::to_string(l1) + " common neighbours do not form an equivalence (vertex " +
                         std::to_string(x) + " vs " + std::to_string(y) + ")"};
        }
      });
    }
    if (!ok) continue;
    const std::size_t size = rel[0].count();
    CanonicalPartition part;
    Bitset assigned(static_cast<std::size_t>(n));
    for (int x = 0; x < n && ok; ++x) {
      if (assigned.test(static_cast<std::size_t>(x))) continue;
      const Bitset& cls = rel[static_cast<std::size_t>(x)];
      if (cls.count() != size) {
        ok = false;
        failure = {NotDdg::Reason::UnequalClasses, "candidate classes for lambda1 = " + std::to_string(l1) +
                                                       " have unequal sizes"};
        break;
      }
      assigned |= cls;
      part.classes.push_back(cls);
    }
    if (!ok) continue;
    DdgParams p;
    p.V = n;
    p.K = d.k;
    p.lambda1 = l1;
    p.lambda2 = l2;
    p.n = static_cast<std::int64_t>(size);
    p.m = n / p.n;
    if (!p.proper()) {
      failure = {NotDdg::Reason::Improper, "partition " + p.to_string() + " is not proper"};
      continue;
    }
    found.push_back({p, std::move(part)});
  }
  if (found.empty()) return failure;
  return found;
}

Result<DdgParams, std::string> verify_ddg_partition(const Graph& g, const CanonicalPartition& p) {
  p.validate(g.order());
  const auto k = g.regular_degree();
  if (!k) return std::string("graph is not regular");
  if (g.is_complete() || g.is_edgeless()) return std::string("graph is complete or edgeless");
  const auto cls = p.class_of();
  std::int64_t l1 = -1;
  std::int64_t l2 = -1;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      const std::int64_t cn = g.common_neighbors(x, y);
      std::int64_t& expected = cls[static_cast<std::size_t>(x)] == cls[static_cast<std::size_t>(y)] ? l1 : l2;
      if (expected < 0) {
        expected = cn;
      } else if (expected != cn) {
        return "pair " + pair_string(x, y) + " has " + std::to_string(cn) + " common neighbours, expected " +
               std::to_string(expected);
      }
    }
  DdgParams out;
  out.V = g.order();
  out.K = *k;
  out.m = static_cast<std::int64_t>(p.class_count());
  out.n = out.V / out.m;
  if (out.n < 2 || out.m < 2) return std::string("partition is trivial");
  out.lambda1 = l1;
  out.lambda2 = l2;
  return out;
}

bool QuotientMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool QuotientMatrix::is_constant(std::int64_t value) const {
  return std::all_of(entries.begin(), entries.end(), [&](std::int64_t e) { return e == value; });
}

Result<QuotientMatrix, NotEquitable> quotient_matrix(const Graph& g, const CanonicalPartition& p) {
  p.validate(g.order());
  QuotientMatrix q;
  q.m = p.class_count();
  q.entries.assign(q.m * q.m, -1);
  for (std::size_t i = 0; i < q.m; ++i) {
    std::optional<NotEquitable> bad;
    p.classes[i].for_each([&](std::size_t x) {
      if (bad) return;
      for (std::size_t j = 0; j < q.m; ++j) {
        const auto cnt = static_cast<std::int64_t>(g.neighbors(static_cast<int>(x)).intersect_count(p.classes[j]));
        std::int64_t& slot = q.entries[i * q.m + j];
        if (slot < 0) {
          slot = cnt;
        } else if (slot != cnt) {
          bad = NotEquitable{static_cast<int>(x), j,
                             "vertex " + std::to_string(x) + " of class " + std::to_string(i) + " has " +
                                 std::to_string(cnt) + " neighbours in class " + std::to_string(j) + ", expected " +
                                 std::to_string(slot)};
          return;
        }
      }
    });
    if (bad) return *bad;
  }
  return q;
}

}  // namespace srgddg
