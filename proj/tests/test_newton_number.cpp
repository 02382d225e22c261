#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor_jump/newton_number.hpp"
#include "milnor_jump/singularity.hpp"
#include "oracles.hpp"

using namespace milnor_jump;

namespace {
SupportSet support(std::vector<LatticePoint> pts) { return SupportSet::from_points(std::move(pts)); }
}  // namespace

TEST_CASE("is_convenient") {
  CHECK(is_convenient(support({{3, 0}, {0, 2}})));
  CHECK_FALSE(is_convenient(support({{3, 0}, {1, 1}})));
  CHECK(is_convenient(support({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})));
  CHECK_FALSE(is_convenient(SupportSet(2)));
}

TEST_CASE("restrict_to_subspace") {
  CHECK(restrict_to_subspace(support({{3, 0}, {0, 2}, {1, 1}}), {0}) == support({{3}}));
  CHECK(restrict_to_subspace(support({{11, 0, 0}, {0, 6, 0}, {0, 0, 5}}), {1, 2}) == support({{6, 0}, {0, 5}}));
  const SupportSet s = support({{2, 0}, {0, 2}, {1, 1}});
  CHECK(restrict_to_subspace(s, {0, 1}) == s);
  CHECK(restrict_to_subspace(support({{1, 1}}), {0}).empty());
  CHECK_THROWS_AS(restrict_to_subspace(s, {}), InvalidInput);
}

TEST_CASE("newton_number on the documented supports") {
  CHECK(newton_number(support({{3, 0}, {0, 2}})) == 2);
  CHECK(newton_number(support({{11, 0, 0}, {0, 6, 0}, {0, 0, 5}})) == 200);
  CHECK(newton_number(support({{2, 0}, {0, 2}, {1, 0}})) == 0);
  CHECK(newton_number(support({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}, {2, 2, 0}})) == 11);
  CHECK_THROWS_AS(newton_number(support({{3, 0}, {1, 1}})), InvalidInput);
}

TEST_CASE("points inside Gamma_+ are ignored") {
  const SupportSet s = support({{3, 0}, {0, 3}});
  CHECK(newton_number(s.with({2, 2})) == newton_number(s));
  CHECK(newton_number(s.with({2, 1})) == newton_number(s));
}

TEST_CASE("Kouchnirenko consistency for simplex supports") {
  for (const auto& e : std::vector<std::vector<std::int64_t>>{{2}, {9}, {2, 2}, {3, 7}, {4, 4, 4}, {2, 3, 5, 7}}) {
    const BrieskornPham p(e);
    CHECK(newton_number(bp_support(p)) == milnor_number(p));
  }
}

TEST_CASE("planar Newton numbers match the shoelace oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> axis(1, 10), coord(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<oracle::Pt2> pts{{axis(rng), 0}, {0, axis(rng)}};
    for (int k = static_cast<int>(coord(rng)) % 5; k > 0; --k) {
      oracle::Pt2 q{coord(rng), coord(rng)};
      if (q != oracle::Pt2{0, 0}) pts.push_back(q);
    }
    SupportSet s(2);
    for (const auto& [x, y] : pts) s.insert(LatticePoint{x, y});
    REQUIRE(newton_number(s) == oracle::newton_number2(pts));
  }
}

TEST_CASE("monotonicity: adding a lattice point never increases nu") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::int64_t> exp(2, 6), coord(0, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<std::int64_t> e(n);
    for (auto& v : e) v = exp(rng);
    SupportSet s = bp_support(BrieskornPham(e));
    const Integer before = newton_number(s);
    std::vector<std::int64_t> c(n);
    for (auto& v : c) v = coord(rng);
    if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) continue;
    REQUIRE(newton_number(s.with(LatticePoint(c))) <= before);
  }
}

TEST_CASE("strict monotonicity under the simplex diagram") {
  for (const auto& e : std::vector<std::vector<std::int64_t>>{{3, 3}, {2, 5}, {4, 6}, {3, 4, 5}, {2, 3, 7}}) {
    const BrieskornPham p(e);
    const SupportSet s = bp_support(p);
    const Integer before = newton_number(s);
    for (const auto& i : oracle::points_under(e)) {
      REQUIRE(newton_number(s.with(LatticePoint(i))) < before);
    }
  }
}

TEST_CASE("permuting axes leaves nu unchanged") {
  const std::vector<LatticePoint> base{{5, 0, 0}, {0, 4, 0}, {0, 0, 6}, {1, 2, 0}, {2, 1, 1}};
  const Integer reference = newton_number(SupportSet::from_points(base));
  std::vector<std::size_t> perm{0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    SupportSet s(3);
    for (const auto& q : base) s.insert(LatticePoint{q[perm[0]], q[perm[1]], q[perm[2]]});
    CHECK(newton_number(s) == reference);
  }
}
