#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Index of a ray (0-based) in the fan's ray list.
using RayIndex = int;

/// A simplicial cone, given by the sorted, distinct indices of its rays.
struct Cone {
  std::vector<RayIndex> ray_indices;

  std::size_t size() const { return ray_indices.size(); }
  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

/// A codimension-one cone of a complete fan, i.e. a torus-invariant curve.
/// For d = 1 the single wall is empty and stands for the curve X = P^1.
struct Wall {
  std::vector<RayIndex> ray_indices;
  std::pair<std::size_t, std::size_t> adjacent;  // maximal-cone indices

  friend bool operator==(const Wall&, const Wall&) = default;
};

enum class ViolationKind {
  no_cones,
  non_primitive_ray,
  duplicate_ray,
  unused_ray,
  cone_size,
  duplicate_cone,
  not_smooth,
  incomplete,
  wall_overfull,
  cones_overlap,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<RayIndex> rays;       // offending rays, 0-based
  std::vector<std::size_t> cones;   // offending maximal cones, 0-based
  std::string message;
};

/// Empty iff the input defines a smooth complete toric variety.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// The fan of a toric variety: primitive ray generators and maximal cones.
///
/// Construction rejects structurally malformed input (dimension mismatches,
/// out-of-range or repeated indices inside a cone) with InputError. Geometric
/// conditions (smoothness, completeness, the fan condition) are checked once at
/// construction and reported by validate(); they are data, not errors.
class Fan {
 public:
  Fan(int dim, std::vector<LatticePoint> rays, std::vector<Cone> max_cones);

  int dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<LatticePoint>& rays() const { return rays_; }
  const LatticePoint& ray(RayIndex i) const { return rays_.at(static_cast<std::size_t>(i)); }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  const ValidationReport& validation() const { return report_; }
  bool is_valid() const { return report_.ok(); }

  /// True iff the sorted, distinct ray set spans a cone of the fan (the empty
  /// set spans the zero cone). Only meaningful for valid fans.
  bool is_face(const std::vector<RayIndex>& sorted_rays) const { return faces_.contains(sorted_rays); }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
  }

 private:
  int dim_;
  std::vector<LatticePoint> rays_;
  std::vector<Cone> max_cones_;
  std::set<std::vector<RayIndex>> faces_;
  ValidationReport report_;
};

/// The stored validation report of `fan`.
ValidationReport validate(const Fan& fan);

/// Every (d-1)-subset of a maximal cone, once, with its two adjacent maximal
/// cones. Throws PreconditionError for an invalid fan.
std::vector<Wall> walls(const Fan& fan);

/// The smallest cone of the fan whose ray set contains `rays`, or nullopt if
/// the rays span no cone. For a simplicial fan that cone is `rays` itself.
std::optional<Cone> cone_containing(std::vector<RayIndex> rays, const Fan& fan);

}  // namespace toric
