#include "srgddg/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "srgddg/errors.hpp"

namespace srgddg::exact {

namespace {

void check_cap(const IntMatrix& m, const ExactOptions& opts) {
  if (m.dim() > opts.size_cap)
    throw Error(ErrorCode::SizeCap, "matrix dimension " + std::to_string(m.dim()) + " exceeds cap " +
                                        std::to_string(opts.size_cap));
}

// Nonzero entries per row, so products with 0/1 adjacency matrices cost
// O(nnz * n) instead of O(n^3).
struct SparseRows {
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;

  explicit SparseRows(const IntMatrix& m) : rows(m.dim()) {
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        if (m(i, j) != 0) rows[i].emplace_back(j, m(i, j));
  }
};

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
  IntMatrix m(n);
  for (auto& e : m.entries_) e = 1;
  return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    g.neighbors(v).for_each([&](std::size_t u) { m(static_cast<std::size_t>(v), u) = 1; });
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::shifted(const Integer& theta) const {
  IntMatrix m(*this);
  for (std::size_t i = 0; i < n_; ++i) m(i, i) -= theta;
  return m;
}

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_roots(const std::vector<std::pair<std::int64_t, std::int64_t>>& roots) {
  IntPoly p({Integer(1)});
  for (auto [root, mult] : roots)
    for (std::int64_t i = 0; i < mult; ++i) p = p * IntPoly({Integer(-root), Integer(1)});
  return p;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPoly::divide_by_root(const Integer& root) {
  if (coeffs_.size() < 2) return false;
  // Synthetic division from the top; the final carry is the remainder.
  const std::size_t d = coeffs_.size() - 1;
  std::vector<Integer> q(d);
  Integer carry = coeffs_[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = carry;
    carry = coeffs_[i] + carry * root;
  }
  if (carry != 0) return false;
  coeffs_ = std::move(q);
  return true;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::int64_t Spectrum::total_multiplicity() const {
  std::int64_t t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::int64_t Spectrum::multiplicity_of(std::int64_t value) const {
  for (const auto& e : entries)
    if (e.value == value) return e.multiplicity;
  return 0;
}

Integer Spectrum::power_sum(unsigned power) const {
  Integer s = 0;
  for (const auto& e : entries) {
    Integer term;
    mpz_pow_ui(term.get_mpz_t(), Integer(static_cast<long>(e.value)).get_mpz_t(), power);
    s += term * static_cast<long>(e.multiplicity);
  }
  return s;
}

std::string Spectrum::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i].value << "^" << entries[i].multiplicity;
  }
  return os.str();
}

IntPoly char_poly(const IntMatrix& a, const ExactOptions& opts) {
  check_cap(a, opts);
  const std::size_t n = a.dim();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "char_poly of an empty matrix");
  const SparseRows sparse(a);

  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k,  M_1 = I.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix next(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) next(i, j) = 0;
        for (const auto& [col, val] : sparse.rows[i]) {
          if (val == 1) {
            for (std::size_t j = 0; j < n; ++j) next(i, j) += m(col, j);
          } else {
            for (std::size_t j = 0; j < n; ++j) next(i, j) += val * m(col, j);
          }
        }
        next(i, i) += c[n - k + 1];
      }
      std::swap(m, next);
    }
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [col, val] : sparse.rows[i]) tr += val * m(col, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

Result<Spectrum, NonIntegral> integral_spectrum(const IntMatrix& m, const ExactOptions& opts) {
  check_cap(m, opts);
  if (!m.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "integral_spectrum requires a symmetric matrix");
  IntPoly p = char_poly(m, opts);

  // Every integer eigenvalue lies within the Gershgorin bound.
  Integer bound = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) row += abs(m(i, j));
    bound = std::max(bound, row);
  }
  if (!bound.fits_slong_p()) throw Error(ErrorCode::SizeCap, "matrix entries too large for root search");
  const long b = bound.get_si();

  Spectrum spec;
  for (long theta = b; theta >= -b && p.degree() > 0; --theta) {
    if (theta != 0) {
      const Integer& constant = p.coefficient(0);
      if (constant != 0 && !mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(std::labs(theta))))
        continue;
    }
    std::int64_t mult = 0;
    while (p.degree() > 0 && p.divide_by_root(Integer(theta))) ++mult;
    if (mult > 0) spec.entries.push_back({theta, mult});
  }
  if (p.degree() > 0) return NonIntegral{std::move(spec), std::move(p)};
  return spec;
}

std::size_t rank(const IntMatrix& input, const ExactOptions& opts) {
  check_cap(input, opts);
  IntMatrix a(input);
  const std::size_t n = a.dim();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t pivot = r;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer t = a(i, j) * a(r, col) - a(i, col) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

}  // namespace srgddg::exact
