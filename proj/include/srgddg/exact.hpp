#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "srgddg/graph.hpp"
#include "srgddg/result.hpp"

namespace srgddg::exact {

using Integer = mpz_class;

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n);
  static IntMatrix adjacency(const Graph& g);

  std::size_t dim() const noexcept { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_symmetric() const;
  Integer trace() const;
  /// M - theta * I
  IntMatrix shifted(const Integer& theta) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

/// Integer polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);

  /// (x - root)^multiplicity expanded, times this.
  static IntPoly from_roots(const std::vector<std::pair<std::int64_t, std::int64_t>>& roots);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Integer& coefficient(std::size_t i) const { return coeffs_[i]; }

  Integer evaluate(const Integer& x) const;

  /// Divides by (x - root) if root is a root; returns false otherwise.
  bool divide_by_root(const Integer& root);

  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

struct Eigenpair {
  std::int64_t value;
  std::int64_t multiplicity;
  friend bool operator==(const Eigenpair&, const Eigenpair&) = default;
};

/// Integer eigenvalues with multiplicities, sorted by descending eigenvalue.
struct Spectrum {
  std::vector<Eigenpair> entries;

  std::int64_t total_multiplicity() const;
  std::int64_t multiplicity_of(std::int64_t value) const;
  /// Sum of value^power * multiplicity.
  Integer power_sum(unsigned power) const;
  std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// The characteristic polynomial does not split over the integers.
struct NonIntegral {
  Spectrum integral_part;  // integer roots found before deflation stalled
  IntPoly unsplit_factor;
};

struct ExactOptions {
  std::size_t size_cap = 512;
};

/// det(xI - M) via Faddeev-LeVerrier with exact integer division.
IntPoly char_poly(const IntMatrix& m, const ExactOptions& opts = {});

/// Integer roots of char_poly(m) with multiplicities, or NonIntegral.
/// Requires a symmetric matrix.
Result<Spectrum, NonIntegral> integral_spectrum(const IntMatrix& m, const ExactOptions& opts = {});

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m, const ExactOptions& opts = {});

}  // namespace srgddg::exact
