#include "srgddg/galois.hpp"

#include <string>

#include "srgddg/designs.hpp"
#include "srgddg/errors.hpp"

namespace srgddg::galois {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `index`.
Poly monic_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
  Poly poly(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    poly[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  poly[degree] = 1;
  return poly;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(0) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::SizeCap, "field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t idx = 0;; ++idx) {
      Poly cand = monic_from_index(idx, e, p);
      if (is_irreducible(cand, p)) {
        modulus_ = std::move(cand);
        break;
      }
    }
  }

  // Smallest primitive element, then exp/log tables.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (Element w = 1; w < q_; ++w) {
    Element x = 1;
    std::uint32_t i = 0;
    bool primitive = true;
    for (; i < q_ - 1; ++i) {
      if (i > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[i] = x;
      x = mul_slow(x, w);
    }
    if (primitive) break;
  }
  for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

Element FiniteField::add(Element a, Element b) const {
  Element out = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Element FiniteField::neg(Element a) const {
  Element out = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Element FiniteField::mul_slow(Element a, Element b) const {
  if (e_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  Poly pa(e_), pb(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
  Poly r = poly_mod(prod, modulus_, p_);
  Element out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::vector<std::vector<Element>> projective_points(const FiniteField& f, int dim) {
  std::vector<std::vector<Element>> pts;
  const std::uint32_t q = f.order();
  // Leading 1 at position lead, zeros before, free coordinates after.
  // Iterating lead descending keeps coordinate-lexicographic order.
  for (int lead = dim - 1; lead >= 0; --lead) {
    const int free = dim - 1 - lead;
    std::vector<Element> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(lead)] = 1;
    std::uint64_t total = ipow(q, static_cast<std::uint32_t>(free));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (int i = dim - 1; i > lead; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<Element>(t % q);
        t /= q;
      }
      pts.push_back(v);
    }
  }
  return pts;
}

Element symplectic_form(const FiniteField& f, const std::vector<Element>& x, const std::vector<Element>& y) {
  Element acc = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    acc = f.add(acc, f.mul(x[i], y[i + 1]));
    acc = f.sub(acc, f.mul(x[i + 1], y[i]));
  }
  return acc;
}

namespace {

std::uint64_t projective_count(std::uint32_t q, int dim) { return (ipow(q, static_cast<std::uint32_t>(dim)) - 1) / (q - 1); }

void check_size(std::uint64_t count, int cap) {
  if (count > static_cast<std::uint64_t>(cap))
    throw Error(ErrorCode::SizeCap, std::to_string(count) + " vertices exceeds the size cap " + std::to_string(cap));
}

}  // namespace

Graph symplectic_complement(int d, const FiniteField& f, int size_cap) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "symplectic_complement requires d >= 2");
  check_size(projective_count(f.order(), 2 * d), size_cap);
  const auto pts = projective_points(f, 2 * d);
  const int n = static_cast<int>(pts.size());
  GraphBuilder b(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (symplectic_form(f, pts[static_cast<std::size_t>(x)], pts[static_cast<std::size_t>(y)]) != 0) b.add_edge(x, y);
  return std::move(b).build("sp-complement(" + std::to_string(d) + "," + std::to_string(f.order()) + ")");
}

VertexSet standard_lagrangian(int d, const FiniteField& f) {
  const auto pts = projective_points(f, 2 * d);
  VertexSet out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool inside = true;
    for (std::size_t c = 1; c < pts[i].size(); c += 2) inside = inside && pts[i][c] == 0;
    if (inside) out.set(i);
  }
  return out;
}

SymmetricDesign pg_hyperplane_design(int d, const FiniteField& f, int size_cap) {
  if (d < 3) throw Error(ErrorCode::InvalidArgument, "pg_hyperplane_design requires d >= 3");
  check_size(projective_count(f.order(), d), size_cap);
  const auto pts = projective_points(f, d);
  std::vector<Bitset> blocks;
  blocks.reserve(pts.size());
  for (const auto& form : pts) {
    Bitset block(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Element dot = 0;
      for (std::size_t c = 0; c < form.size(); ++c) dot = f.add(dot, f.mul(form[c], pts[i][c]));
      if (dot == 0) block.set(i);
    }
    blocks.push_back(std::move(block));
  }
  return SymmetricDesign(static_cast<int>(pts.size()), std::move(blocks));
}

}  // namespace srgddg::galois
