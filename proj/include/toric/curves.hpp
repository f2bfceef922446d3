#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/bundle.hpp"
#include "toric/chow.hpp"

namespace toric {

/// Degrees of the Chern roots on the invariant curve V(wall).
struct CurveRestriction {
  Wall wall;
  std::vector<std::int64_t> row_degrees;
};

/// One record per wall; row i has degree sum_j a_ij deg([X_j] . [V(wall)]).
std::vector<CurveRestriction> restrict_all(const ChowRing& ring, const RowModelBundle& e);

/// Semistability of the restriction to every invariant curve.
///
/// The bundle is treated as split of type given by its rows, so the
/// restriction to each rational curve is semistable iff all row degrees on it
/// agree. When that holds everywhere, `rows_equal_in_a1` says whether all roots
/// are one class L in A^1 (the isomorphism E = L^r need not be equivariant).
struct SemistabilityVerdict {
  bool semistable = false;
  std::optional<CurveRestriction> witness;  // first wall with unequal degrees
  std::vector<CurveRestriction> degrees_table;
  bool rows_equal_in_a1 = false;
  std::optional<ChowClass> common_line_class;  // reduced c_1(L) when rows agree
};

SemistabilityVerdict semistability_verdict(const ChowRing& ring, const RowModelBundle& e);

}  // namespace toric
