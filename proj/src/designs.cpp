#include "srgddg/designs.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "srgddg/errors.hpp"

namespace srgddg {

SymmetricDesign::SymmetricDesign(int points, std::vector<Bitset> blocks) : points_(points), blocks_(std::move(blocks)) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "a design needs at least one point");
  for (const auto& b : blocks_)
    if (b.size() != static_cast<std::size_t>(points))
      throw Error(ErrorCode::InvalidArgument, "block length does not match the point count");
  if (!blocks_.empty()) block_size_ = static_cast<int>(blocks_[0].count());
  if (blocks_.size() >= 2) lambda_ = static_cast<int>(blocks_[0].intersect_count(blocks_[1]));
}

int SymmetricDesign::find_block(const Bitset& b) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] == b) return static_cast<int>(i);
  return -1;
}

SymmetricDesign SymmetricDesign::dual() const {
  std::vector<Bitset> t(static_cast<std::size_t>(points_), Bitset(blocks_.size()));
  for (std::size_t j = 0; j < blocks_.size(); ++j) blocks_[j].for_each([&](std::size_t i) { t[i].set(j); });
  return SymmetricDesign(static_cast<int>(blocks_.size()), std::move(t));
}

std::optional<DesignViolation> verify_design(const SymmetricDesign& d) {
  const int v = d.points();
  const auto& blocks = d.blocks();
  const long long k = d.block_size();
  const long long lam = d.lambda();
  if (static_cast<int>(blocks.size()) != v)
    return DesignViolation{"design has " + std::to_string(blocks.size()) + " blocks but " + std::to_string(v) +
                           " points"};
  if (v < 2) return DesignViolation{"a symmetric 2-design needs at least two points"};
  for (int i = 0; i < v; ++i)
    if (static_cast<long long>(blocks[static_cast<std::size_t>(i)].count()) != k)
      return DesignViolation{"block " + std::to_string(i) + " has size " +
                             std::to_string(blocks[static_cast<std::size_t>(i)].count()) + ", expected " +
                             std::to_string(k)};
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      const auto meet = static_cast<long long>(blocks[static_cast<std::size_t>(i)].intersect_count(blocks[static_cast<std::size_t>(j)]));
      if (meet != lam)
        return DesignViolation{"blocks " + std::to_string(i) + " and " + std::to_string(j) + " meet in " +
                               std::to_string(meet) + " points, expected " + std::to_string(lam)};
    }
  const SymmetricDesign t = d.dual();
  for (int x = 0; x < v; ++x)
    if (static_cast<long long>(t.block(x).count()) != k)
      return DesignViolation{"point " + std::to_string(x) + " lies on " + std::to_string(t.block(x).count()) +
                             " blocks, expected " + std::to_string(k)};
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      const auto cover = static_cast<long long>(t.block(x).intersect_count(t.block(y)));
      if (cover != lam)
        return DesignViolation{"points " + std::to_string(x) + " and " + std::to_string(y) + " lie in " +
                               std::to_string(cover) + " common blocks, expected " + std::to_string(lam)};
    }
  if (lam * (v - 1) != k * (k - 1))
    return DesignViolation{"lambda(v-1) != k(k-1)"};
  return std::nullopt;
}

SymmetricDesign complement_design(const SymmetricDesign& d) {
  const long long v = d.points();
  const long long k = d.block_size();
  if (k > v - 2) throw Error(ErrorCode::DegenerateDesign, "complement requires k <= v - 2");
  const long long new_lambda = v - 2 * k + d.lambda();
  if (new_lambda <= 0)
    throw Error(ErrorCode::DegenerateDesign, "complementary design has lambda " + std::to_string(new_lambda));
  std::vector<Bitset> blocks;
  blocks.reserve(d.blocks().size());
  for (const auto& b : d.blocks()) blocks.push_back(b.complement());
  return SymmetricDesign(d.points(), std::move(blocks));
}

SymmetricDesign all_ksubsets_design(int v) {
  if (v < 3) throw Error(ErrorCode::InvalidArgument, "all_ksubsets_design requires v >= 3");
  std::vector<Bitset> blocks;
  // Lexicographic order of (v-1)-subsets: omit v-1 first, 0 last.
  for (int omit = v - 1; omit >= 0; --omit) {
    Bitset b = Bitset::full(static_cast<std::size_t>(v));
    b.reset(static_cast<std::size_t>(omit));
    blocks.push_back(std::move(b));
  }
  return SymmetricDesign(v, std::move(blocks));
}

DesignParams required_design_params(long long n, long long s) {
  if (n < 2 || s > -1 || n + s <= 0)
    throw Error(ErrorCode::InvalidArgument, "required_design_params needs n >= 2, s <= -1, n + s > 0");
  const long long m_num = (-s) * (n - 1);
  if (m_num % (n + s) != 0)
    throw Error(ErrorCode::NonIntegral, "m = (-s)(n-1)/(n+s) is not an integer");
  const long long lam_num = (-s) * (n + s);
  if (lam_num % n != 0) throw Error(ErrorCode::NonIntegral, "design lambda = (-s)(n+s)/n is not an integer");
  return {m_num / (n + s), -s, lam_num / n};
}

namespace {

long long squarefree_part(long long x) {
  long long sign = x < 0 ? -1 : 1;
  x = std::llabs(x);
  long long out = 1;
  for (long long p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * x;
}

bool is_square_mod(long long a, long long m) {
  if (m == 1) return true;
  a = ((a % m) + m) % m;
  for (long long x = 0; x < m; ++x)
    if ((x * x) % m == a) return true;
  return false;
}

bool is_perfect_square(long long x) {
  if (x < 0) return false;
  long long r = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

// Legendre: a x^2 + b y^2 + c z^2 = 0 has a nontrivial integer solution.
bool legendre_solvable(long long a, long long b, long long c) {
  a = squarefree_part(a);
  b = squarefree_part(b);
  c = squarefree_part(c);
  for (int guard = 0; guard < 64; ++guard) {
    long long g = std::gcd(a, b);
    if (g > 1) {
      a /= g;
      b /= g;
      c = squarefree_part(c * g);
      continue;
    }
    g = std::gcd(b, c);
    if (g > 1) {
      b /= g;
      c /= g;
      a = squarefree_part(a * g);
      continue;
    }
    g = std::gcd(a, c);
    if (g > 1) {
      a /= g;
      c /= g;
      b = squarefree_part(b * g);
      continue;
    }
    break;
  }
  if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) return false;
  return is_square_mod(-b * c, std::llabs(a)) && is_square_mod(-a * c, std::llabs(b)) &&
         is_square_mod(-a * b, std::llabs(c));
}

}  // namespace

bool bruck_ryser_chowla(long long v, long long k, long long lambda) {
  if (v % 2 == 0) return is_perfect_square(k - lambda);
  const long long sign = ((v - 1) / 2) % 2 == 0 ? 1 : -1;
  // x^2 = (k - lambda) y^2 + sign * lambda z^2
  if (k == lambda || lambda == 0) return true;
  return legendre_solvable(1, -(k - lambda), -sign * lambda);
}

}  // namespace srgddg
