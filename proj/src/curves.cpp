#include "toric/curves.hpp"

#include <algorithm>

#include "toric/chern.hpp"
#include "toric/checked.hpp"
#include "toric/error.hpp"

namespace toric {

std::vector<CurveRestriction> restrict_all(const ChowRing& ring, const RowModelBundle& e) {
  if (ring.ray_count() != e.ray_count())
    throw InputError("bundle has " + std::to_string(e.ray_count()) + " rays per row, fan has " +
                     std::to_string(ring.ray_count()));
  std::vector<CurveRestriction> out;
  for (auto& wall : walls(ring.fan())) {
    // [V(wall)] is the product of the wall's ray classes; for d = 1 it is [X].
    const ChowClass curve(ring.dim() - 1, {{Monomial(wall.ray_indices.begin(), wall.ray_indices.end()), 1}});
    std::vector<std::int64_t> divisor_degree(ring.ray_count());
    for (std::size_t j = 0; j < ring.ray_count(); ++j)
      divisor_degree[j] = ring.degree(ring.multiply(ring.divisor_class(static_cast<RayIndex>(j)), curve));

    CurveRestriction r{std::move(wall), {}};
    for (const auto& row : e.rows()) {
      std::int64_t deg = 0;
      for (std::size_t j = 0; j < row.size(); ++j) deg = checked::add(deg, checked::mul(row[j], divisor_degree[j]));
      r.row_degrees.push_back(deg);
    }
    out.push_back(std::move(r));
  }
  return out;
}

SemistabilityVerdict semistability_verdict(const ChowRing& ring, const RowModelBundle& e) {
  SemistabilityVerdict v;
  v.degrees_table = restrict_all(ring, e);
  v.semistable = true;
  for (const auto& r : v.degrees_table) {
    const auto& deg = r.row_degrees;
    if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
      v.semistable = false;
      v.witness = r;
      break;
    }
  }
  if (!v.semistable || e.rank() == 0) return v;

  const ChowClass first = ring.reduce(root_class(e, 0));
  v.rows_equal_in_a1 = true;
  for (std::size_t i = 1; i < e.rank(); ++i)
    if (!ring.equal_classes(root_class(e, i), first)) v.rows_equal_in_a1 = false;
  if (v.rows_equal_in_a1) v.common_line_class = first;
  return v;
}

}  // namespace toric
