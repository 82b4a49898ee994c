#include <doctest.h>

#include "srgddg/designs.hpp"
#include "srgddg/errors.hpp"

using namespace srgddg;

namespace {

SymmetricDesign from_lists(int v, const std::vector<std::vector<int>>& lists) {
  std::vector<Bitset> blocks;
  for (const auto& l : lists) blocks.push_back(Bitset::from_members(static_cast<std::size_t>(v), l));
  return SymmetricDesign(v, blocks);
}

const std::vector<std::vector<int>> kFano{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};

}  // namespace

TEST_CASE("Fano plane") {
  SymmetricDesign fano = from_lists(7, kFano);
  CHECK(fano.block_size() == 3);
  CHECK(fano.lambda() == 1);
  CHECK_FALSE(verify_design(fano).has_value());
  CHECK(fano.find_block(Bitset::from_members(7, std::vector<int>{1, 4, 6})) == 4);
  CHECK(fano.find_block(Bitset::from_members(7, std::vector<int>{1, 2, 6})) == -1);
  CHECK_FALSE(verify_design(fano.dual()).has_value());

  SymmetricDesign co = complement_design(fano);
  CHECK(co.block_size() == 4);
  CHECK(co.lambda() == 2);
  CHECK_FALSE(verify_design(co).has_value());
}

TEST_CASE("verify_design catches every kind of damage") {
  auto broken = kFano;
  broken[6] = {2, 4, 6};  // repeated pair {4,6}, missing {4,5}
  CHECK(verify_design(from_lists(7, broken)).has_value());
  auto short_block = kFano;
  short_block[3] = {1, 3};
  CHECK(verify_design(from_lists(7, short_block)).has_value());
  auto too_few = kFano;
  too_few.pop_back();
  CHECK(verify_design(from_lists(7, too_few)).has_value());
}

TEST_CASE("all (v-1)-subsets") {
  SymmetricDesign d = all_ksubsets_design(4);
  CHECK(d.points() == 4);
  CHECK(d.block_size() == 3);
  CHECK(d.lambda() == 2);
  CHECK_FALSE(verify_design(d).has_value());
  CHECK(d.block(0).members() == std::vector<int>{0, 1, 2});
  CHECK(d.block(3).members() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(all_ksubsets_design(2), Error);
  // complement would be the trivial 2-(4,1,0)
  CHECK_THROWS_AS(complement_design(d), Error);
}

TEST_CASE("design parameters required by the family") {
  CHECK(required_design_params(4, -2) == DesignParams{3, 2, 1});
  CHECK(required_design_params(9, -3) == DesignParams{4, 3, 2});
  CHECK(required_design_params(8, -4) == DesignParams{7, 4, 2});
  CHECK(required_design_params(36, -6) == DesignParams{7, 6, 5});
  try {
    required_design_params(5, -2);  // m = 8/3
    FAIL("expected NonIntegral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegral);
  }
  CHECK_THROWS_AS(required_design_params(2, -2), Error);
}

TEST_CASE("Bruck-Ryser-Chowla") {
  CHECK(bruck_ryser_chowla(7, 3, 1));
  CHECK(bruck_ryser_chowla(13, 4, 1));
  CHECK_FALSE(bruck_ryser_chowla(43, 7, 1));  // projective plane of order 6
  CHECK_FALSE(bruck_ryser_chowla(22, 7, 2));  // even v, k - lambda = 5 not a square
  CHECK(bruck_ryser_chowla(16, 6, 2));
  CHECK(bruck_ryser_chowla(111, 11, 1));       // order 10: passes, existence fails otherwise
}
