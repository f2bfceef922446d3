#include <random>

#include "doctest.h"
#include "support/test_support.hpp"
#include "toric/bundle.hpp"
#include "toric/chern.hpp"
#include "toric/error.hpp"
#include "toric/examples.hpp"

using namespace toric;

TEST_CASE("line_bundle") {
  const ChowRing p2(builtin_fan("P2"));
  const std::vector<std::int64_t> a{1, 0, 0};
  const auto o1 = line_bundle(a, 3);
  CHECK(o1.rank() == 1);
  CHECK(o1.rows() == std::vector<std::vector<std::int64_t>>{{1, 0, 0}});
  const auto c = chern_classes(p2, o1, 2);
  CHECK(p2.equal_classes(c.chern[1], p2.divisor_class(2)));  // every x_j is H on P2

  const std::vector<std::int64_t> zero{0, 0, 0};
  const auto trivial = chern_classes(p2, line_bundle(zero, 3), 2);
  CHECK(trivial.chern[1].is_zero());
  CHECK(trivial.chern[2].is_zero());

  const ChowRing p1(builtin_fan("P1"));
  const std::vector<std::int64_t> two{2, 0};
  CHECK(p1.degree(chern_classes(p1, line_bundle(two, 2), 1).chern[1]) == 2);

  CHECK_THROWS_AS(line_bundle(two, 3), InputError);
}

TEST_CASE("direct_sum") {
  const std::vector<std::int64_t> a{1, 0, 0}, b{2, 0, 0};
  const auto sum = direct_sum(line_bundle(a, 3), line_bundle(b, 3));
  CHECK(sum.rank() == 2);
  CHECK(sum.rows() == std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {2, 0, 0}});
  CHECK(direct_sum(sum, RowModelBundle::zero(3)) == sum);
  CHECK_THROWS_AS(direct_sum(sum, RowModelBundle::zero(4)), InputError);

  const ChowRing p2(builtin_fan("P2"));
  const auto ab = chern_classes(p2, sum, 2);
  const auto ba = chern_classes(p2, direct_sum(line_bundle(b, 3), line_bundle(a, 3)), 2);
  for (int k = 0; k <= 2; ++k) CHECK(ab.chern[static_cast<std::size_t>(k)] == ba.chern[static_cast<std::size_t>(k)]);
}

TEST_CASE("dual negates c_1") {
  std::mt19937_64 rng(testing::seed());
  for (const auto& name : {"P2", "P1xP1", "F1"}) {
    const ChowRing ring(builtin_fan(name));
    for (int trial = 0; trial < 10; ++trial) {
      const auto e = testing::random_bundle(rng, ring.ray_count(), 4, -3, 3);
      const auto c = chern_classes(ring, e, 1);
      const auto cd = chern_classes(ring, dual(e), 1);
      CHECK(ring.equal_classes(cd.chern[1], -c.chern[1]));
    }
  }
}

TEST_CASE("from_ray_characters pairs each character with its ray") {
  const Fan p2 = builtin_fan("P2");
  // One row: character (1,0) near X_1, (0,0) elsewhere, i.e. O(X_1).
  const auto e = from_ray_characters(p2, {{Character{1, 0}, Character{0, 0}, Character{0, 0}}});
  CHECK(e.rows() == std::vector<std::vector<std::int64_t>>{{1, 0, 0}});
  const auto g = from_ray_characters(p2, {{Character{1, 2}, Character{1, 2}, Character{1, 2}}});
  CHECK(g.rows() == std::vector<std::vector<std::int64_t>>{{1, 2, -3}});
  CHECK_THROWS_AS(from_ray_characters(p2, {{Character{1, 0}}}), InputError);
}

TEST_CASE("validate_dtable") {
  DTableBundle good{2, {Character{1}, Character{0}}, {{1, 1}, {1, 1}}};
  CHECK(validate_dtable(good).ok());

  DTableBundle short_ray = good;
  short_ray.d[1] = {1, 0};
  const auto r = validate_dtable(short_ray);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == DTableViolationKind::rank_sum);
  CHECK(r.violations[0].ray == 1);

  DTableBundle dup{2, {Character{1}, Character{1}}, {{1, 1}, {1, 1}}};
  CHECK(validate_dtable(dup).has(DTableViolationKind::duplicate_character));

  DTableBundle negative{0, {Character{1}, Character{0}}, {{1, -1}, {0, 0}}};
  CHECK(validate_dtable(negative).has(DTableViolationKind::negative_entry));

  DTableBundle ragged{1, {Character{1}}, {{1, 0}}};
  CHECK(validate_dtable(ragged).has(DTableViolationKind::shape));
}

TEST_CASE("expand_dtable") {
  const Fan p1 = builtin_fan("P1");
  const DTableBundle single{1, {Character{1}}, {{1}, {1}}};
  CHECK(expand_dtable(single, p1).rows() == std::vector<std::vector<std::int64_t>>{{1, -1}});

  const DTableBundle empty{0, {}, {{}, {}}};
  CHECK(expand_dtable(empty, p1).rank() == 0);

  const DTableBundle trivial{2, {Character{0}}, {{2}, {2}}};
  CHECK(expand_dtable(trivial, p1).rows() == std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 0}});

  const DTableBundle ambiguous{1, {Character{1}, Character{0}}, {{1, 0}, {0, 1}}};
  CHECK_THROWS_WITH_AS(expand_dtable(ambiguous, p1), doctest::Contains("ambiguous d-table"), InputError);
}

TEST_CASE("expand then regroup recovers the table") {
  std::mt19937_64 rng(testing::seed());
  std::uniform_int_distribution<std::int64_t> coord(-3, 3), mult(0, 3);
  const Fan f1 = builtin_fan("F1");
  for (int trial = 0; trial < 50; ++trial) {
    DTableBundle e;
    std::vector<std::int64_t> mu;
    while (e.characters.size() < 3) {
      Character m{coord(rng), coord(rng)};
      if (std::find(e.characters.begin(), e.characters.end(), m) != e.characters.end()) continue;
      e.characters.push_back(m);
      mu.push_back(1 + mult(rng));
    }
    for (auto v : mu) e.rank += static_cast<std::size_t>(v);
    e.d.assign(f1.ray_count(), mu);
    const auto chars = row_characters(e);
    CHECK(chars.size() == e.rank);
    CHECK(regroup(chars, f1.ray_count()) == e);
    CHECK(expand_dtable(e, f1).rank() == e.rank);
  }
}
