#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srgddg/bitset.hpp"

namespace srgddg {

/// Symmetric 2-(v, k, lambda) design stored as explicit block incidence
/// bitsets over the points 0..v-1. The stored k and lambda are read off the
/// blocks at construction (size of block 0, intersection of blocks 0 and 1);
/// verify_design checks that every block and pair agrees.
class SymmetricDesign {
 public:
  SymmetricDesign() = default;
  SymmetricDesign(int points, std::vector<Bitset> blocks);

  int points() const noexcept { return points_; }
  int block_size() const noexcept { return block_size_; }
  int lambda() const noexcept { return lambda_; }
  const std::vector<Bitset>& blocks() const noexcept { return blocks_; }
  const Bitset& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  /// Index of the block equal to `b`, or -1.
  int find_block(const Bitset& b) const;

  /// Transpose of the incidence structure: block j = {i : j in block i}.
  SymmetricDesign dual() const;

  friend bool operator==(const SymmetricDesign&, const SymmetricDesign&) = default;

 private:
  int points_ = 0;
  int block_size_ = 0;
  int lambda_ = 0;
  std::vector<Bitset> blocks_;
};

struct DesignViolation {
  std::string what;
};

/// Brute-force check of every symmetric-design axiom; nullopt when valid.
std::optional<DesignViolation> verify_design(const SymmetricDesign& d);

/// Blocks replaced by their complements: 2-(v, v-k, v-2k+lambda).
/// Throws Error(DegenerateDesign) when the new lambda would be <= 0.
SymmetricDesign complement_design(const SymmetricDesign& d);

/// All (v-1)-subsets of v points in lexicographic order: 2-(v, v-1, v-2).
SymmetricDesign all_ksubsets_design(int v);

struct DesignParams {
  long long points;
  long long block_size;
  long long lambda;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// (m, -s, (-s)(n+s)/n): the design that glues a coclique of size m onto a
/// DDG with class size n. Throws Error(NonIntegral) if m or lambda is not
/// an integer, Error(InvalidArgument) unless n >= 2, s <= -1, n + s > 0.
DesignParams required_design_params(long long n, long long s);

/// Bruck-Ryser-Chowla necessary condition for a symmetric 2-(v,k,lambda)
/// design. Advisory only; the feasibility engine does not filter on it.
bool bruck_ryser_chowla(long long v, long long k, long long lambda);

}  // namespace srgddg
