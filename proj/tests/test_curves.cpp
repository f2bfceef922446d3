#include <random>

#include "doctest.h"
#include "support/test_support.hpp"
#include "toric/chern.hpp"
#include "toric/curves.hpp"
#include "toric/examples.hpp"

using namespace toric;

TEST_CASE("restrict_all") {
  const ChowRing p2(builtin_fan("P2"));
  for (const auto& r : restrict_all(p2, RowModelBundle(3, {{1, 0, 0}}))) CHECK(r.row_degrees == std::vector<std::int64_t>{1});
  for (const auto& r : restrict_all(p2, RowModelBundle(3, {{0, 0, 0}, {0, 0, 0}})))
    CHECK(r.row_degrees == std::vector<std::int64_t>{0, 0});
  const auto table = restrict_all(p2, RowModelBundle(3, {{1, 0, 0}, {2, 0, 0}}));
  REQUIRE(table.size() == 3);
  for (const auto& r : table) CHECK(r.row_degrees == std::vector<std::int64_t>{1, 2});

  // On F1 the divisor x_2 meets x_1 and x_3 once, has self-intersection -1 and
  // misses x_4.
  const ChowRing f1(builtin_fan("F1"));
  const auto f1_table = restrict_all(f1, RowModelBundle(4, {{0, 1, 0, 0}}));
  std::vector<std::int64_t> degs;
  for (const auto& r : f1_table) degs.push_back(r.row_degrees[0]);
  CHECK(degs == std::vector<std::int64_t>{1, -1, 1, 0});
}

TEST_CASE("semistability_verdict") {
  const ChowRing p2(builtin_fan("P2"));
  SUBCASE("O(1)^3") {
    const auto v = semistability_verdict(p2, RowModelBundle(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(v.semistable);
    CHECK_FALSE(v.witness.has_value());
    CHECK(v.rows_equal_in_a1);
    REQUIRE(v.common_line_class.has_value());
    CHECK(p2.equal_classes(*v.common_line_class, p2.divisor_class(0)));
  }
  SUBCASE("O(1) + O(2)") {
    const auto v = semistability_verdict(p2, RowModelBundle(3, {{1, 0, 0}, {2, 0, 0}}));
    CHECK_FALSE(v.semistable);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->row_degrees == std::vector<std::int64_t>{1, 2});
  }
  SUBCASE("rank one is always semistable") {
    std::mt19937_64 rng(testing::seed());
    for (const auto& name : builtin_fan_names()) {
      const ChowRing ring(builtin_fan(name));
      for (int trial = 0; trial < 5; ++trial)
        CHECK(semistability_verdict(ring, testing::random_bundle(rng, ring.ray_count(), 1, -3, 3)).semistable);
    }
  }
  SUBCASE("equal curve degrees but different classes") {
    // On P1xP1 the rows x1 + x3 and x2 + x4 are equal classes; x1 and x3 are
    // not, and already differ on curves.
    const ChowRing q(builtin_fan("P1xP1"));
    const auto v = semistability_verdict(q, RowModelBundle(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(v.semistable);
    CHECK(v.rows_equal_in_a1);
    CHECK_FALSE(semistability_verdict(q, RowModelBundle(4, {{1, 0, 0, 0}, {0, 0, 1, 0}})).semistable);
  }
}

TEST_CASE("verdict properties") {
  std::mt19937_64 rng(testing::seed());
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  for (const auto& name : {"P2", "P1xP1", "F1", "P3"}) {
    const ChowRing ring(builtin_fan(name));
    for (int trial = 0; trial < 20; ++trial) {
      const auto e = testing::random_bundle(rng, ring.ray_count(), 4, -2, 2);
      const bool base = semistability_verdict(ring, e).semistable;

      auto shuffled = e.rows();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(semistability_verdict(ring, RowModelBundle(e.ray_count(), shuffled)).semistable == base);

      std::vector<std::int64_t> shift(ring.ray_count());
      for (auto& x : shift) x = entry(rng);
      CHECK(semistability_verdict(ring, twist(e, shift)).semistable == base);
    }
  }
}

TEST_CASE("P1: verdict iff the row sums agree") {
  const ChowRing p1(builtin_fan("P1"));
  std::mt19937_64 rng(testing::seed());
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = testing::random_bundle(rng, 2, 4, -3, 3);
    bool same = true;
    for (const auto& row : e.rows()) same = same && row[0] + row[1] == e.rows()[0][0] + e.rows()[0][1];
    CHECK(semistability_verdict(p1, e).semistable == same);
  }
}

TEST_CASE("semistable split bundles have c = (1 + c_1/r)^r") {
  std::mt19937_64 rng(testing::seed());
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  for (const auto& name : {"P2", "P1xP1", "F1"}) {
    const ChowRing ring(builtin_fan(name));
    for (int trial = 0; trial < 10; ++trial) {
      // L^r twisted into different but linearly equivalent rows.
      std::vector<std::int64_t> base(ring.ray_count());
      for (auto& x : base) x = entry(rng);
      const auto r = static_cast<std::int64_t>(1 + trial % 3);
      std::vector<std::vector<std::int64_t>> rows;
      for (std::int64_t i = 0; i < r; ++i) {
        auto row = base;
        // add the linear relation of a random character
        const Character m{entry(rng), entry(rng)};
        for (std::size_t j = 0; j < row.size(); ++j) row[j] += pairing(m, ring.fan().rays()[j]);
        rows.push_back(row);
      }
      const RowModelBundle e(ring.ray_count(), rows);
      const auto v = semistability_verdict(ring, e);
      REQUIRE(v.semistable);
      REQUIRE(v.rows_equal_in_a1);
      const auto c = chern_classes(ring, e, 2);
      const auto& l = *v.common_line_class;
      CHECK(ring.equal_classes(c.chern[1], l * r));
      CHECK(ring.equal_classes(c.chern[2], ring.multiply(l, l) * (r * (r - 1) / 2)));
    }
  }
}
