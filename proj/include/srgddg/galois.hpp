#pragma once

#include <cstdint>
#include <vector>

#include "srgddg/graph.hpp"

namespace srgddg {
class SymmetricDesign;
}

namespace srgddg::galois {

/// Elements of GF(p^e) are the integers 0..q-1; element a stands for the
/// polynomial sum_i digit_i(a) x^i with base-p digits.
using Element = std::uint32_t;

/// GF(p^e) with a deterministic modulus: the smallest monic irreducible of
/// degree e, ordering candidates x^e + c_{e-1}x^{e-1} + ... + c_0 by the
/// integer sum_i c_i p^i.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1U << 16;

  /// Throws Error(InvalidArgument) if p is not prime or e < 1, and
  /// Error(SizeCap) if p^e exceeds kMaxOrder.
  FiniteField(std::uint32_t p, std::uint32_t e);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, ascending coefficients (length e + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// The element x (equal to p for e >= 2).
  Element generator_x() const noexcept { return e_ == 1 ? 0 : p_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws on zero.
  Element inv(Element a) const;

 private:
  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = w^i for a primitive element w
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

/// Points of PG(dim-1, q): nonzero vectors of length `dim` whose first
/// nonzero coordinate is 1, in lexicographic order of coordinates.
std::vector<std::vector<Element>> projective_points(const FiniteField& f, int dim);

/// B(x, y) = sum_i (x_{2i} y_{2i+1} - x_{2i+1} y_{2i}) on vectors of even length.
Element symplectic_form(const FiniteField& f, const std::vector<Element>& x, const std::vector<Element>& y);

/// Non-orthogonality graph on the points of PG(2d-1, q): x ~ y iff x != y
/// and B(x, y) != 0. This realizes the complement of the symplectic graph
/// Sp(2d, q) directly. Vertex numbering follows projective_points.
Graph symplectic_complement(int d, const FiniteField& f, int size_cap = 5000);

/// Vertices of the standard Lagrangian subspace <e_0, e_2, ..., e_{2d-2}>,
/// a totally isotropic d-space, hence a coclique of symplectic_complement.
VertexSet standard_lagrangian(int d, const FiniteField& f);

/// Points vs hyperplanes of PG(d-1, q): the symmetric design
/// 2-((q^d-1)/(q-1), (q^{d-1}-1)/(q-1), (q^{d-2}-1)/(q-1)). Requires d >= 3.
/// Block i is the kernel of the linear form given by point i.
SymmetricDesign pg_hyperplane_design(int d, const FiniteField& f, int size_cap = 5000);

}  // namespace srgddg::galois
