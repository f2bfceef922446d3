#include "toric/report.hpp"

#include <sstream>

namespace toric::report {

namespace {

std::string one_based(const std::vector<RayIndex>& idx) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i] + 1;
  out << '}';
  return out.str();
}

template <typename Coeff>
json terms_json(const GradedClass<Coeff>& a) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms()) {
    json t;
    t["monomial"] = m;
    if constexpr (std::is_same_v<Coeff, mpq_class>)
      t["coeff"] = c.get_str();
    else
      t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  return terms;
}

std::string degree_suffix(const ChowRing& ring, const ChowClass& a) {
  if (a.grade() != ring.dim()) return "";
  return "  (degree " + std::to_string(ring.degree(a)) + ")";
}

std::string degree_suffix(const ChowRing& ring, const RationalClass& a) {
  if (a.grade() != ring.dim()) return "";
  return "  (degree " + ring.degree(a).get_str() + ")";
}

}  // namespace

json class_json(const ChowRing& ring, const ChowClass& a) {
  json out;
  out["grade"] = a.grade();
  out["terms"] = terms_json(a);
  out["text"] = format_class(a);
  if (a.grade() == ring.dim()) out["degree"] = ring.degree(a);
  return out;
}

json class_json(const ChowRing& ring, const RationalClass& a) {
  json out;
  out["grade"] = a.grade();
  out["terms"] = terms_json(a);
  out["text"] = format_class(a);
  if (a.grade() == ring.dim()) out["degree"] = ring.degree(a).get_str();
  return out;
}

json validation_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json j;
    j["kind"] = to_string(v.kind);
    j["rays"] = v.rays;
    j["cones"] = v.cones;
    j["message"] = v.message;
    violations.push_back(std::move(j));
  }
  json out;
  out["valid"] = r.ok();
  out["violations"] = std::move(violations);
  return out;
}

std::string validation_text(const ValidationReport& r) {
  if (r.ok()) return "valid: smooth complete fan\n";
  std::ostringstream out;
  out << "invalid: " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) out << "  [" << to_string(v.kind) << "] " << v.message << '\n';
  return out.str();
}

json chern_json(const ChowRing& ring, const ChernReport& r) {
  json out;
  out["rank"] = r.rank;
  out["dim"] = ring.dim();
  out["up_to"] = r.up_to;
  json newton = json::array();
  for (const auto& n : r.newton) newton.push_back(class_json(ring, n));
  json chern = json::array();
  for (const auto& c : r.chern) chern.push_back(class_json(ring, c));
  out["newton"] = std::move(newton);
  out["chern"] = std::move(chern);
  out["ch"] = ch_json(ring, r.ch);
  out["crosscheck"] = {{"newton_identities", r.crosscheck.newton_identities},
                       {"c1_equals_n1", r.crosscheck.first_class},
                       {"residue_formula", r.crosscheck.residue_formula},
                       {"status", r.crosscheck.ok() ? "ok" : "failed"},
                       {"detail", r.crosscheck.detail}};
  return out;
}

std::string chern_text(const ChowRing& ring, const ChernReport& r) {
  std::ostringstream out;
  out << "rank " << r.rank << " bundle on a " << ring.dim() << "-dimensional toric variety\n";
  out << "Newton classes:\n";
  for (std::size_t p = 0; p < r.newton.size(); ++p)
    out << "  N_" << p + 1 << " = " << format_class(r.newton[p]) << degree_suffix(ring, r.newton[p]) << '\n';
  out << "Chern classes:\n";
  for (std::size_t k = 0; k < r.chern.size(); ++k)
    out << "  c_" << k << " = " << format_class(r.chern[k]) << degree_suffix(ring, r.chern[k]) << '\n';
  out << "Chern character:\n";
  for (std::size_t g = 0; g < r.ch.size(); ++g)
    out << "  ch_" << g << " = " << format_class(r.ch[g]) << degree_suffix(ring, r.ch[g]) << '\n';
  out << "cross-check: " << (r.crosscheck.ok() ? "ok" : "FAILED: " + r.crosscheck.detail)
      << " (Newton identities, c_1 = N_1, residue traces)\n";
  return out.str();
}

json ch_json(const ChowRing& ring, const std::vector<RationalClass>& ch) {
  json out = json::array();
  for (const auto& c : ch) out.push_back(class_json(ring, c));
  return out;
}

std::string ch_text(const ChowRing& ring, const std::vector<RationalClass>& ch) {
  std::ostringstream out;
  for (std::size_t g = 0; g < ch.size(); ++g)
    out << "ch_" << g << " = " << format_class(ch[g]) << degree_suffix(ring, ch[g]) << '\n';
  return out.str();
}

json verdict_json(const SemistabilityVerdict& v) {
  auto restriction_json = [](const CurveRestriction& r) {
    json j;
    j["wall"] = r.wall.ray_indices;
    j["adjacent_cones"] = {r.wall.adjacent.first, r.wall.adjacent.second};
    j["row_degrees"] = r.row_degrees;
    return j;
  };
  json out;
  out["semistable"] = v.semistable;
  out["witness_wall"] = v.witness ? json(v.witness->wall.ray_indices) : json(nullptr);
  json table = json::array();
  for (const auto& r : v.degrees_table) table.push_back(restriction_json(r));
  out["degrees_table"] = std::move(table);
  out["rows_equal_in_a1"] = v.rows_equal_in_a1;
  out["common_line_class"] = v.common_line_class ? json(format_class(*v.common_line_class)) : json(nullptr);
  return out;
}

std::string verdict_text(const SemistabilityVerdict& v) {
  std::ostringstream out;
  out << "semistable on every invariant curve: " << (v.semistable ? "yes" : "no") << '\n';
  for (const auto& r : v.degrees_table) {
    out << "  wall " << one_based(r.wall.ray_indices) << " degrees (";
    for (std::size_t i = 0; i < r.row_degrees.size(); ++i) out << (i ? "," : "") << r.row_degrees[i];
    out << ")\n";
  }
  if (v.witness) out << "witness wall: " << one_based(v.witness->wall.ray_indices) << '\n';
  if (v.semistable) {
    if (v.common_line_class)
      out << "all roots equal in A^1: L with c_1 = " << format_class(*v.common_line_class) << '\n';
    else if (!v.degrees_table.empty() && !v.degrees_table.front().row_degrees.empty())
      out << "roots differ in A^1 although all curve degrees agree\n";
  }
  return out.str();
}

json dtable_comparison_json(const ChowRing& ring, const DTablePathComparison& c) {
  json newton = json::array();
  for (const auto& g : c.newton) {
    json j;
    j["p"] = g.p;
    j["literal_formal"] = format_class(g.literal_formal);
    j["row_model_formal"] = format_class(g.row_formal);
    j["literal"] = class_json(ring, g.literal);
    j["row_model"] = class_json(ring, g.row);
    j["formal_agree"] = g.formal_agree;
    j["reduced_agree"] = g.reduced_agree;
    newton.push_back(std::move(j));
  }
  json out;
  out["newton"] = std::move(newton);
  out["chern_agree"] = c.chern_agree;
  out["diverges"] = c.diverges();
  return out;
}

std::string dtable_comparison_text(const DTablePathComparison& c) {
  std::ostringstream out;
  out << "character-table formulas vs row model: " << (c.diverges() ? "DIVERGE" : "agree") << '\n';
  for (const auto& g : c.newton) {
    out << "  N_" << g.p << " literal = " << format_class(g.literal_formal)
        << "\n  N_" << g.p << " rows    = " << format_class(g.row_formal) << "\n    formal "
        << (g.formal_agree ? "agree" : "differ") << ", reduced " << (g.reduced_agree ? "agree" : "differ")
        << '\n';
  }
  for (std::size_t k = 0; k < c.chern_agree.size(); ++k)
    out << "  c_" << k << ": " << (c.chern_agree[k] ? "agree" : "differ") << '\n';
  return out.str();
}

}  // namespace toric::report
