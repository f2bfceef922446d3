#include "toric/chern.hpp"

#include <algorithm>
#include <numeric>

#include "toric/checked.hpp"
#include "toric/error.hpp"

namespace toric {

namespace {

void check_ray(const RowModelBundle& e, RayIndex ray) {
  if (ray < 0 || static_cast<std::size_t>(ray) >= e.ray_count())
    throw InputError("ray index " + std::to_string(ray) + " out of range (" +
                     std::to_string(e.ray_count()) + " rays)");
}

void check_ring(const ChowRing& ring, const RowModelBundle& e) {
  if (ring.ray_count() != e.ray_count())
    throw InputError("bundle has " + std::to_string(e.ray_count()) + " rays per row, fan has " +
                     std::to_string(ring.ray_count()));
}

std::int64_t factorial(int n) {
  std::int64_t out = 1;
  for (int i = 2; i <= n; ++i) out = checked::mul(out, i);
  return out;
}

// e_k of the classes by summing over k-subsets.
ChowClass elementary_symmetric(const ChowRing& ring, const std::vector<ChowClass>& roots, int k) {
  if (k == 0) return ring.one();
  const int grade = std::min(k, ring.dim());
  ChowClass sum(grade);
  if (static_cast<std::size_t>(k) > roots.size()) return sum;
  std::vector<bool> pick(roots.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    ChowClass product = ring.one();
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (pick[i]) product = ring.multiply(product, roots[i]);
    sum += product;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return ring.reduce(sum);
}

}  // namespace

ResidueMatrix residue_matrix(const RowModelBundle& e, RayIndex ray) {
  check_ray(e, ray);
  ResidueMatrix out{ray, {}};
  for (std::size_t i = 0; i < e.rank(); ++i)
    out.diagonal.push_back(checked::neg(e.pairing(i, static_cast<std::size_t>(ray))));
  return out;
}

std::int64_t residue_trace(const RowModelBundle& e, std::span<const int> exponents) {
  if (exponents.size() != e.ray_count())
    throw InputError("residue_trace: " + std::to_string(exponents.size()) + " exponents for " +
                     std::to_string(e.ray_count()) + " rays");
  // The residues are simultaneously diagonal, so the composite is diagonal too.
  std::vector<std::int64_t> composite(e.rank(), 1);
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 0) throw InputError("residue_trace: negative exponent");
    if (exponents[j] == 0) continue;
    const auto res = residue_matrix(e, static_cast<RayIndex>(j));
    for (std::size_t i = 0; i < composite.size(); ++i)
      composite[i] = checked::mul(composite[i], checked::pow(res.diagonal[i], exponents[j]));
  }
  std::int64_t trace = 0;
  for (auto v : composite) trace = checked::add(trace, v);
  return trace;
}

ChowClass root_class(const RowModelBundle& e, std::size_t row) {
  ChowClass out(1);
  for (std::size_t j = 0; j < e.ray_count(); ++j) out.add_term({static_cast<RayIndex>(j)}, e.pairing(row, j));
  return out;
}

ChowClass newton_class(const ChowRing& ring, const RowModelBundle& e, int p) {
  check_ring(ring, e);
  if (p < 1) throw InputError("newton_class: p must be at least 1");
  if (p > ring.dim()) return ring.zero(ring.dim());
  ChowClass sum(p);
  for (std::size_t i = 0; i < e.rank(); ++i) sum += ring.power(root_class(e, i), p);
  return ring.reduce(sum);
}

ChowClass newton_class_from_residues(const ChowRing& ring, const RowModelBundle& e, int p) {
  check_ring(ring, e);
  if (p < 1) throw InputError("newton_class_from_residues: p must be at least 1");
  if (p > ring.dim()) return ring.zero(ring.dim());
  const std::size_t s = e.ray_count();
  const std::int64_t sign = p % 2 == 0 ? 1 : -1;
  ChowClass sum(p);
  std::vector<int> alpha(s, 0);
  // Enumerate compositions of p into s parts.
  auto visit = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j + 1 == s || s == 0) {
      if (s == 0) return;
      alpha[j] = remaining;
      std::int64_t multinomial = factorial(p);
      Monomial mono;
      for (std::size_t k = 0; k < s; ++k) {
        multinomial /= factorial(alpha[k]);
        mono.insert(mono.end(), static_cast<std::size_t>(alpha[k]), static_cast<RayIndex>(k));
      }
      const std::int64_t trace = residue_trace(e, alpha);
      sum.add_term(mono, checked::mul(sign, checked::mul(multinomial, trace)));
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      alpha[j] = a;
      self(self, j + 1, remaining - a);
    }
  };
  visit(visit, 0, p);
  return ring.reduce(sum);
}

std::vector<ChowClass> dtable_roots(const Fan& fan, const DTableBundle& e) {
  if (e.ray_count() != fan.ray_count())
    throw InputError("d-table has " + std::to_string(e.ray_count()) + " rays, fan has " +
                     std::to_string(fan.ray_count()));
  const auto report = validate_dtable(e);
  if (!report.ok()) throw InputError("d-table is invalid: " + report.violations.front().message);
  std::vector<ChowClass> roots;
  for (std::size_t c = 0; c < e.characters.size(); ++c) {
    ChowClass root(1);
    for (std::size_t n = 0; n < e.ray_count(); ++n)
      root.add_term({static_cast<RayIndex>(n)}, checked::mul(e.d[n][c], pairing(e.characters[c], fan.rays()[n])));
    roots.push_back(std::move(root));
  }
  return roots;
}

ChowClass newton_class_dtable_formal(const Fan& fan, const DTableBundle& e, int p) {
  if (p < 1) throw InputError("newton_class_dtable: p must be at least 1");
  ChowClass sum(p);
  for (const auto& root : dtable_roots(fan, e)) {
    ChowClass power(0, {{Monomial{}, 1}});
    for (int i = 0; i < p; ++i) power = formal_product(power, root);
    sum += power;
  }
  return sum;
}

ChowClass newton_class_dtable(const ChowRing& ring, const DTableBundle& e, int p) {
  if (p > ring.dim()) return ring.zero(ring.dim());
  return ring.reduce(newton_class_dtable_formal(ring.fan(), e, p));
}

std::vector<ChowClass> chern_classes_dtable(const ChowRing& ring, const DTableBundle& e, int up_to) {
  if (up_to < 0 || up_to > ring.dim()) throw InputError("chern_classes_dtable: grade out of range");
  const auto roots = dtable_roots(ring.fan(), e);
  std::vector<ChowClass> out;
  for (int k = 0; k <= up_to; ++k) out.push_back(elementary_symmetric(ring, roots, k));
  return out;
}

std::vector<ChowClass> chern_from_newton(const ChowRing& ring, const std::vector<ChowClass>& newton,
                                         int up_to) {
  if (static_cast<int>(newton.size()) < up_to) throw InputError("chern_from_newton: too few Newton classes");
  std::vector<RationalClass> e{RationalClass(0, {{Monomial{}, 1}})};
  std::vector<ChowClass> out{ring.one()};
  for (int j = 1; j <= up_to; ++j) {
    RationalClass acc(j);
    for (int i = 1; i <= j; ++i) {
      const RationalClass term = ring.multiply(e[static_cast<std::size_t>(j - i)],
                                               to_rational(newton[static_cast<std::size_t>(i - 1)]));
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    const RationalClass ej = ring.reduce(acc * mpq_class(1, j));
    out.push_back(to_integral(ej, "Newton recursion for c_" + std::to_string(j)));
    e.push_back(ej);
  }
  return out;
}

std::vector<RationalClass> chern_character(const ChowRing& ring, const RowModelBundle& e, int up_to) {
  check_ring(ring, e);
  if (up_to < 0 || up_to > ring.dim()) throw InputError("chern_character: grade out of range");
  std::vector<RationalClass> out{RationalClass(0, {{Monomial{}, mpq_class(static_cast<long>(e.rank()))}})};
  for (int g = 1; g <= up_to; ++g)
    out.push_back(to_rational(newton_class(ring, e, g)) * mpq_class(1, factorial(g)));
  return out;
}

ChernReport chern_classes(const ChowRing& ring, const RowModelBundle& e, int up_to) {
  check_ring(ring, e);
  if (up_to < 0 || up_to > ring.dim())
    throw InputError("chern_classes: grade " + std::to_string(up_to) + " outside 0.." +
                     std::to_string(ring.dim()));
  ChernReport report;
  report.rank = e.rank();
  report.up_to = up_to;

  std::vector<ChowClass> roots;
  for (std::size_t i = 0; i < e.rank(); ++i) roots.push_back(root_class(e, i));
  for (int p = 1; p <= ring.dim(); ++p) report.newton.push_back(newton_class(ring, e, p));
  for (int k = 0; k <= up_to; ++k) report.chern.push_back(elementary_symmetric(ring, roots, k));
  report.ch = chern_character(ring, e, up_to);

  auto& cc = report.crosscheck;
  const auto via_newton = chern_from_newton(ring, report.newton, up_to);
  cc.newton_identities = true;
  for (int k = 1; k <= up_to; ++k) {
    if (!ring.equal_classes(via_newton[static_cast<std::size_t>(k)], report.chern[static_cast<std::size_t>(k)])) {
      cc.newton_identities = false;
      cc.detail = "Newton recursion disagrees with e_" + std::to_string(k);
    }
  }
  cc.first_class = up_to < 1 || ring.equal_classes(report.chern[1], report.newton[0]);
  if (!cc.first_class) cc.detail = "c_1 differs from N_1";
  cc.residue_formula = true;
  for (int p = 1; p <= ring.dim(); ++p) {
    if (!ring.equal_classes(newton_class_from_residues(ring, e, p), report.newton[static_cast<std::size_t>(p - 1)])) {
      cc.residue_formula = false;
      cc.detail = "residue-trace N_" + std::to_string(p) + " differs from the root-power sum";
    }
  }
  if (!cc.ok()) throw ConsistencyError("chern_classes cross-check failed: " + cc.detail);
  cc.detail = "ok";
  return report;
}

bool DTablePathComparison::diverges() const {
  for (const auto& g : newton)
    if (!g.formal_agree || !g.reduced_agree) return true;
  return std::find(chern_agree.begin(), chern_agree.end(), false) != chern_agree.end();
}

DTablePathComparison compare_dtable_paths(const ChowRing& ring, const DTableBundle& e, int up_to) {
  if (up_to < 0 || up_to > ring.dim()) throw InputError("compare_dtable_paths: grade out of range");
  const RowModelBundle rows = expand_dtable(e, ring.fan());
  DTablePathComparison out;
  for (int p = 1; p <= up_to; ++p) {
    DTablePathComparison::Grade g;
    g.p = p;
    g.literal_formal = newton_class_dtable_formal(ring.fan(), e, p);
    g.row_formal = ChowClass(p);
    for (std::size_t i = 0; i < rows.rank(); ++i) {
      ChowClass power(0, {{Monomial{}, 1}});
      for (int k = 0; k < p; ++k) power = formal_product(power, root_class(rows, i));
      g.row_formal += power;
    }
    g.literal = ring.reduce(g.literal_formal);
    g.row = newton_class(ring, rows, p);
    g.formal_agree = g.literal_formal == g.row_formal;
    g.reduced_agree = ring.equal_classes(g.literal, g.row);
    out.newton.push_back(std::move(g));
  }
  const auto literal = chern_classes_dtable(ring, e, up_to);
  std::vector<ChowClass> roots;
  for (std::size_t i = 0; i < rows.rank(); ++i) roots.push_back(root_class(rows, i));
  for (int k = 0; k <= up_to; ++k) {
    const auto direct = k == 0 ? ring.one() : elementary_symmetric(ring, roots, k);
    out.chern_agree.push_back(ring.equal_classes(literal[static_cast<std::size_t>(k)], direct));
  }
  return out;
}

}  // namespace toric
