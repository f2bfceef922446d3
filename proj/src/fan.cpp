#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "toric/checked.hpp"
#include "toric/error.hpp"

namespace toric {

namespace {

std::string format_indices(const std::vector<RayIndex>& idx) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
  out << '}';
  return out.str();
}

// All size-k subsets of a sorted index list, in lexicographic order.
void subsets(const std::vector<RayIndex>& items, std::size_t k, std::size_t start,
             std::vector<RayIndex>& current, std::vector<std::vector<RayIndex>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < items.size(); ++i) {
    current.push_back(items[i]);
    subsets(items, k, i + 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<RayIndex>> subsets(const std::vector<RayIndex>& items, std::size_t k) {
  std::vector<std::vector<RayIndex>> out;
  std::vector<RayIndex> current;
  subsets(items, k, 0, current, out);
  return out;
}

using Inequality = std::vector<std::int64_t>;  // a . y > 0

void normalize(Inequality& row) {
  std::int64_t g = 0;
  for (auto c : row) g = std::gcd(g, c);
  if (g > 1)
    for (auto& c : row) c /= g;
}

// Feasibility of a homogeneous system of strict inequalities a_i . y > 0 by
// Fourier-Motzkin elimination. Exact; sizes here are at most a handful.
bool strictly_feasible(std::vector<Inequality> rows, std::size_t vars) {
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Inequality> pos, neg, next;
    for (auto& r : rows) {
      if (r[v] > 0)
        pos.push_back(std::move(r));
      else if (r[v] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Inequality combo(vars);
        for (std::size_t k = 0; k < vars; ++k)
          combo[k] = checked::add(checked::mul(p[k], -n[v]), checked::mul(n[k], p[v]));
        normalize(combo);
        next.push_back(std::move(combo));
      }
    }
    rows = std::move(next);
  }
  // Every surviving row reads 0 > 0.
  return rows.empty();
}

// Whether two smooth maximal cones meet exactly in their common face: a linear
// form vanishing on the common rays, positive on the rest of `a` and negative
// on the rest of `b` must exist.
bool separated(const Fan& fan, const Cone& a, const Cone& b) {
  const std::size_t d = static_cast<std::size_t>(fan.dim());
  std::vector<std::vector<std::int64_t>> basis;
  for (auto i : a.ray_indices) {
    const auto c = fan.ray(i).coords();
    basis.emplace_back(c.begin(), c.end());
  }
  const std::int64_t det = determinant(basis);

  std::vector<std::size_t> free_slots;  // positions in `a` not shared with `b`
  for (std::size_t i = 0; i < d; ++i)
    if (!std::binary_search(b.ray_indices.begin(), b.ray_indices.end(), a.ray_indices[i]))
      free_slots.push_back(i);

  const std::size_t vars = free_slots.size();
  std::vector<Inequality> rows;
  for (std::size_t v = 0; v < vars; ++v) {
    Inequality r(vars, 0);
    r[v] = 1;
    rows.push_back(std::move(r));
  }
  for (auto k : b.ray_indices) {
    if (std::binary_search(a.ray_indices.begin(), a.ray_indices.end(), k)) continue;
    const auto nk = fan.ray(k).coords();
    Inequality r(vars, 0);
    for (std::size_t v = 0; v < vars; ++v) {
      auto replaced = basis;
      replaced[free_slots[v]].assign(nk.begin(), nk.end());
      // Coordinate of n_k along basis vector free_slots[v]; det is +-1.
      r[v] = checked::neg(determinant(std::move(replaced)) / det);
    }
    normalize(r);
    rows.push_back(std::move(r));
  }
  return strictly_feasible(std::move(rows), vars);
}

ValidationReport compute_report(const Fan& fan) {
  ValidationReport report;
  auto& out = report.violations;
  const auto& rays = fan.rays();
  const auto& cones = fan.max_cones();
  const std::size_t d = static_cast<std::size_t>(fan.dim());

  if (cones.empty()) out.push_back({ViolationKind::no_cones, {}, {}, "fan has no maximal cones"});

  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].is_zero() || !is_primitive(rays[i]))
      out.push_back({ViolationKind::non_primitive_ray, {static_cast<RayIndex>(i)}, {},
                     "ray " + std::to_string(i) + " is not a primitive nonzero vector"});
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == rays[j])
        out.push_back({ViolationKind::duplicate_ray,
                       {static_cast<RayIndex>(i), static_cast<RayIndex>(j)},
                       {},
                       "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide"});
  }

  std::vector<bool> used(rays.size(), false);
  for (const auto& c : cones)
    for (auto r : c.ray_indices) used[static_cast<std::size_t>(r)] = true;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!used[i])
      out.push_back({ViolationKind::unused_ray, {static_cast<RayIndex>(i)}, {},
                     "ray " + std::to_string(i) + " lies in no maximal cone"});

  std::vector<bool> well_formed(cones.size(), false);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto& idx = cones[c].ray_indices;
    if (idx.size() != d) {
      out.push_back({ViolationKind::cone_size, idx, {c},
                     "maximal cone " + std::to_string(c) + " has " + std::to_string(idx.size()) +
                         " rays, expected " + std::to_string(d)});
      continue;
    }
    for (std::size_t e = 0; e < c; ++e)
      if (cones[e] == cones[c])
        out.push_back({ViolationKind::duplicate_cone, idx, {e, c},
                       "maximal cones " + std::to_string(e) + " and " + std::to_string(c) +
                           " coincide"});
    std::vector<LatticePoint> generators;
    for (auto r : idx) generators.push_back(rays[static_cast<std::size_t>(r)]);
    const auto det = cone_determinant(generators);
    if (det != 1) {
      out.push_back({ViolationKind::not_smooth, idx, {c},
                     "maximal cone " + std::to_string(c) + " " + format_indices(idx) +
                         " has |det| = " + std::to_string(det) + ", expected 1"});
      continue;
    }
    well_formed[c] = true;
  }

  std::map<std::vector<RayIndex>, std::vector<std::size_t>> wall_owners;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    if (cones[c].ray_indices.size() != d) continue;
    for (auto& w : subsets(cones[c].ray_indices, d - 1)) {
      auto& owners = wall_owners[w];
      if (std::find(owners.begin(), owners.end(), c) == owners.end()) owners.push_back(c);
    }
  }
  for (const auto& [w, owners] : wall_owners) {
    if (owners.size() == 1)
      out.push_back({ViolationKind::incomplete, w, owners,
                     "wall " + format_indices(w) + " lies in only one maximal cone"});
    else if (owners.size() > 2)
      out.push_back({ViolationKind::wall_overfull, w, owners,
                     "wall " + format_indices(w) + " lies in " + std::to_string(owners.size()) +
                         " maximal cones"});
  }

  for (std::size_t a = 0; a < cones.size(); ++a) {
    if (!well_formed[a]) continue;
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (!well_formed[b] || cones[a] == cones[b]) continue;
      if (!separated(fan, cones[a], cones[b]))
        out.push_back({ViolationKind::cones_overlap, {}, {a, b},
                       "maximal cones " + std::to_string(a) + " and " + std::to_string(b) +
                           " overlap beyond their common face"});
    }
  }
  return report;
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::no_cones: return "no_cones";
    case ViolationKind::non_primitive_ray: return "non_primitive_ray";
    case ViolationKind::duplicate_ray: return "duplicate_ray";
    case ViolationKind::unused_ray: return "unused_ray";
    case ViolationKind::cone_size: return "cone_size";
    case ViolationKind::duplicate_cone: return "duplicate_cone";
    case ViolationKind::not_smooth: return "not_smooth";
    case ViolationKind::incomplete: return "incomplete";
    case ViolationKind::wall_overfull: return "wall_overfull";
    case ViolationKind::cones_overlap: return "cones_overlap";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

Fan::Fan(int dim, std::vector<LatticePoint> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (dim_ < 1) throw InputError("fan dimension must be at least 1, got " + std::to_string(dim_));
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].dim() != static_cast<std::size_t>(dim_))
      throw InputError("ray " + std::to_string(i) + " has " + std::to_string(rays_[i].dim()) +
                       " coordinates, expected " + std::to_string(dim_));
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    auto& idx = max_cones_[c].ray_indices;
    for (auto r : idx)
      if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
        throw InputError("maximal cone " + std::to_string(c) + " references ray " +
                         std::to_string(r) + ", but there are " + std::to_string(rays_.size()) +
                         " rays");
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw InputError("maximal cone " + std::to_string(c) + " repeats a ray index");
  }

  faces_.insert(std::vector<RayIndex>{});
  for (const auto& c : max_cones_)
    for (std::size_t k = 1; k <= c.size(); ++k)
      for (auto& s : subsets(c.ray_indices, k)) faces_.insert(std::move(s));

  report_ = compute_report(*this);
}

ValidationReport validate(const Fan& fan) { return fan.validation(); }

std::vector<Wall> walls(const Fan& fan) {
  if (!fan.is_valid()) throw PreconditionError("walls: fan is not a smooth complete fan");
  const std::size_t d = static_cast<std::size_t>(fan.dim());
  std::map<std::vector<RayIndex>, std::vector<std::size_t>> owners;
  const auto& cones = fan.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (auto& w : subsets(cones[c].ray_indices, d - 1)) owners[w].push_back(c);

  std::vector<Wall> out;
  out.reserve(owners.size());
  for (auto& [w, cs] : owners) {
    if (cs.size() != 2) throw ConsistencyError("walls: wall not shared by exactly two cones");
    out.push_back({w, {cs[0], cs[1]}});
  }
  return out;
}

std::optional<Cone> cone_containing(std::vector<RayIndex> rays, const Fan& fan) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (!fan.is_face(rays)) return std::nullopt;
  return Cone{std::move(rays)};
}

}  // namespace toric
