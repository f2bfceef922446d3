#include "toric/chow.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

using SparseRow = std::map<std::size_t, mpq_class>;

// row += scale * other
void axpy(SparseRow& row, const mpq_class& scale, const SparseRow& other) {
  for (const auto& [col, v] : other) {
    auto [it, inserted] = row.try_emplace(col, scale * v);
    if (!inserted) {
      it->second += scale * v;
      if (sgn(it->second) == 0) row.erase(it);
    }
  }
}

std::vector<RayIndex> support(const Monomial& m) {
  std::vector<RayIndex> s(m.begin(), m.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void multisets(std::size_t vars, std::size_t k, RayIndex start, Monomial& current,
               std::vector<Monomial>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (RayIndex v = start; static_cast<std::size_t>(v) < vars; ++v) {
    current.push_back(v);
    multisets(vars, k, v, current, out);
    current.pop_back();
  }
}

// Incremental reduced row echelon form over Q. Pivots go preferentially to
// entries equal to +-1 and to columns with small `rank`, which keeps the
// pivot rows integral on every fan we have met.
class Eliminator {
 public:
  explicit Eliminator(std::vector<std::size_t> rank) : rank_(std::move(rank)) {}

  void insert(SparseRow row) {
    std::vector<std::pair<std::size_t, mpq_class>> hits;
    for (const auto& [col, v] : row)
      if (pivots_.contains(col)) hits.emplace_back(col, v);
    for (const auto& [col, v] : hits) axpy(row, -v, pivots_.at(col));
    if (row.empty()) return;

    std::size_t best = row.begin()->first;
    bool best_unit = false;
    for (const auto& [col, v] : row) {
      const bool unit = abs(v) == 1;
      if ((unit && !best_unit) || (unit == best_unit && rank_[col] < rank_[best])) {
        best = col;
        best_unit = unit;
      }
    }
    const mpq_class inv = 1 / row.at(best);
    for (auto& [col, v] : row) v *= inv;

    for (auto& [col, prow] : pivots_) {
      auto it = prow.find(best);
      if (it == prow.end()) continue;
      const mpq_class factor = -it->second;
      axpy(prow, factor, row);
    }
    pivots_.emplace(best, std::move(row));
  }

  const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

 private:
  std::vector<std::size_t> rank_;
  std::map<std::size_t, SparseRow> pivots_;
};

GradedBasis build_basis(const Fan& fan, int grade) {
  GradedBasis basis;
  basis.grade = grade;
  const std::size_t s = fan.ray_count();
  const std::size_t d = static_cast<std::size_t>(fan.dim());

  std::vector<Monomial> all;
  Monomial scratch;
  multisets(s, static_cast<std::size_t>(grade), 0, scratch, all);
  for (auto& m : all)
    if (fan.is_face(support(m))) basis.monomials.push_back(std::move(m));
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) basis.index[basis.monomials[i]] = i;

  // Pivot preference: repeated factors first, then reverse lexicographic, so
  // the free columns are lexicographically small squarefree monomials.
  std::vector<std::size_t> order(basis.monomials.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = basis.monomials[a].size() - support(basis.monomials[a]).size();
    const auto rb = basis.monomials[b].size() - support(basis.monomials[b]).size();
    if (ra != rb) return ra > rb;
    return basis.monomials[a] > basis.monomials[b];
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  Eliminator elim(std::move(rank));
  if (grade > 0) {
    std::vector<Monomial> lower;
    multisets(s, static_cast<std::size_t>(grade - 1), 0, scratch, lower);
    for (const auto& u : lower) {
      if (!fan.is_face(support(u))) continue;
      for (std::size_t l = 0; l < d; ++l) {
        SparseRow row;
        for (std::size_t j = 0; j < s; ++j) {
          const auto c = fan.rays()[j][l];
          if (c == 0) continue;
          Monomial m = u;
          m.insert(std::upper_bound(m.begin(), m.end(), static_cast<RayIndex>(j)),
                   static_cast<RayIndex>(j));
          auto it = basis.index.find(m);
          if (it == basis.index.end()) continue;  // Stanley-Reisner monomial
          row[it->second] += c;
        }
        std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
        ++basis.relation_count;
        elim.insert(std::move(row));
      }
    }
  }

  for (std::size_t c = 0; c < basis.monomials.size(); ++c)
    if (!elim.pivots().contains(c)) basis.free_columns.push_back(c);
  for (const auto& [p, row] : elim.pivots()) {
    auto& expr = basis.pivots[p];
    for (const auto& [col, v] : row) {
      if (col == p) continue;
      expr.emplace_back(col, -v);
      if (v.get_den() != 1) basis.integral = false;
    }
  }
  return basis;
}

}  // namespace

RationalClass to_rational(const ChowClass& a) {
  RationalClass out(a.grade());
  for (const auto& [m, c] : a.terms()) out.add_term(m, mpq_class(static_cast<long>(c)));
  return out;
}

ChowClass to_integral(const RationalClass& a, std::string_view what) {
  ChowClass out(a.grade());
  for (const auto& [m, c] : a.terms()) {
    if (c.get_den() != 1)
      throw ConsistencyError(std::string(what) + ": coefficient " + c.get_str() + " of " +
                             format_monomial(m) + " is not an integer");
    if (!c.get_num().fits_slong_p()) throw OverflowError(std::string(what) + ": coefficient too large");
    out.add_term(m, c.get_num().get_si());
  }
  return out;
}

ChowRing::ChowRing(Fan fan) : fan_(std::move(fan)) {
  if (!fan_.is_valid()) throw PreconditionError("Chow ring requested for an invalid fan");
  for (int k = 0; k <= dim(); ++k) bases_.push_back(build_basis(fan_, k));
  if (bases_[0].dimension() != 1 || bases_.back().dimension() != 1)
    throw ConsistencyError("Chow ring: graded pieces 0 and d have dimensions " + std::to_string(bases_[0].dimension()) + " and " + std::to_string(bases_.back().dimension()) + ", expected 1");

  const auto nf = normal_form(to_rational(point_class()));
  if (nf.terms().size() != 1) throw ConsistencyError("Chow ring: point class reduces to zero");
  point_degree_ = 1 / nf.terms().begin()->second;
}

ChowClass ChowRing::one() const { return ChowClass(0, {{Monomial{}, 1}}); }

ChowClass ChowRing::divisor_class(RayIndex j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= ray_count())
    throw InputError("divisor_class: ray index " + std::to_string(j) + " out of range");
  return ChowClass(1, {{Monomial{j}, 1}});
}

ChowClass ChowRing::point_class() const {
  const auto& cone = fan_.max_cones().front().ray_indices;
  return ChowClass(dim(), {{Monomial(cone.begin(), cone.end()), 1}});
}

ChowClass ChowRing::linear_relation(const Character& m) const {
  ChowClass out(1);
  for (std::size_t j = 0; j < ray_count(); ++j)
    out.add_term({static_cast<RayIndex>(j)}, pairing(m, fan_.rays()[j]));
  return out;
}

ChowClass ChowRing::multiply(const ChowClass& a, const ChowClass& b) const {
  if (a.grade() + b.grade() > dim()) return ChowClass(dim());
  return formal_product(a, b);
}

RationalClass ChowRing::multiply(const RationalClass& a, const RationalClass& b) const {
  if (a.grade() + b.grade() > dim()) return RationalClass(dim());
  return formal_product(a, b);
}

ChowClass ChowRing::power(const ChowClass& a, int p) const {
  if (p < 0) throw InputError("power: negative exponent");
  ChowClass out = one();
  for (int i = 0; i < p; ++i) out = multiply(out, a);
  return out;
}

const GradedBasis& ChowRing::basis(int grade) const {
  if (grade < 0 || grade > dim())
    throw InputError("no graded piece of grade " + std::to_string(grade));
  return bases_[static_cast<std::size_t>(grade)];
}

RationalClass ChowRing::normal_form(const RationalClass& a) const {
  if (a.grade() < 0) throw InputError("negative grade");
  if (a.grade() > dim()) return RationalClass(dim());
  const auto& b = basis(a.grade());
  RationalClass out(a.grade());
  for (const auto& [m, c] : a.terms()) {
    if (static_cast<int>(m.size()) != a.grade())
      throw InputError("monomial " + format_monomial(m) + " does not have grade " +
                       std::to_string(a.grade()));
    if (!m.empty() && (m.front() < 0 || static_cast<std::size_t>(m.back()) >= ray_count()))
      throw InputError("monomial " + format_monomial(m) + " references a ray out of range");
    auto it = b.index.find(m);
    if (it == b.index.end()) continue;  // Stanley-Reisner: zero
    auto p = b.pivots.find(it->second);
    if (p == b.pivots.end()) {
      out.add_term(m, c);
      continue;
    }
    for (const auto& [col, v] : p->second) out.add_term(b.monomials[col], c * v);
  }
  return out;
}

ChowClass ChowRing::reduce(const ChowClass& a) const {
  return to_integral(normal_form(to_rational(a)), "reduce");
}

RationalClass ChowRing::reduce(const RationalClass& a) const { return normal_form(a); }

mpq_class ChowRing::degree(const RationalClass& a) const {
  if (a.grade() != dim())
    throw InputError("degree: class has grade " + std::to_string(a.grade()) + ", expected " +
                     std::to_string(dim()));
  const auto nf = normal_form(a);
  if (nf.is_zero()) return 0;
  return nf.terms().begin()->second * point_degree_;
}

std::int64_t ChowRing::degree(const ChowClass& a) const {
  const mpq_class value = degree(to_rational(a));
  if (value.get_den() != 1)
    throw ConsistencyError("degree: non-integral intersection number " + value.get_str());
  if (!value.get_num().fits_slong_p()) throw OverflowError("degree: intersection number too large");
  return value.get_num().get_si();
}

std::int64_t ChowRing::monomial_degree(const Monomial& m,
                                       std::map<Monomial, std::int64_t>& memo) const {
  const auto supp = support(m);
  if (!fan_.is_face(supp)) return 0;
  if (supp.size() == m.size()) return 1;  // squarefree on a maximal cone
  if (auto it = memo.find(m); it != memo.end()) return it->second;

  const auto& cones = fan_.max_cones();
  const auto cone = std::find_if(cones.begin(), cones.end(), [&](const Cone& c) {
    return std::includes(c.ray_indices.begin(), c.ray_indices.end(), supp.begin(), supp.end());
  });
  // Some variable appears at least twice; replace one copy of it.
  RayIndex repeated = -1;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1]) repeated = m[i];

  // Character dual to `repeated` on the cone's basis: <mu, n_i> = [i == repeated].
  const auto& idx = cone->ray_indices;
  const std::size_t d = idx.size();
  const std::size_t slot =
      static_cast<std::size_t>(std::find(idx.begin(), idx.end(), repeated) - idx.begin());
  std::vector<std::vector<std::int64_t>> b;
  for (auto i : idx) b.emplace_back(fan_.ray(i).coords().begin(), fan_.ray(i).coords().end());
  const std::int64_t det = determinant(b);
  std::vector<std::int64_t> mu(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == slot) continue;
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < d; ++c)
        if (c != col) row.push_back(b[r][c]);
      minor.push_back(std::move(row));
    }
    const std::int64_t cof = determinant(std::move(minor));
    mu[col] = ((col + slot) % 2 == 0 ? cof : -cof) / det;
  }
  const Character dual(mu);

  // x_rep = -sum_{l not in cone} <mu, n_l> x_l
  Monomial rest = m;
  rest.erase(std::find(rest.begin(), rest.end(), repeated));
  std::int64_t total = 0;
  for (std::size_t l = 0; l < ray_count(); ++l) {
    if (std::binary_search(idx.begin(), idx.end(), static_cast<RayIndex>(l))) continue;
    const std::int64_t c = pairing(dual, fan_.rays()[l]);
    if (c == 0) continue;
    Monomial next = rest;
    next.insert(std::upper_bound(next.begin(), next.end(), static_cast<RayIndex>(l)),
                static_cast<RayIndex>(l));
    total = checked::sub(total, checked::mul(c, monomial_degree(next, memo)));
  }
  memo.emplace(m, total);
  return total;
}

std::int64_t ChowRing::degree_by_substitution(const ChowClass& a) const {
  if (a.grade() != dim())
    throw InputError("degree: class has grade " + std::to_string(a.grade()) + ", expected " +
                     std::to_string(dim()));
  std::map<Monomial, std::int64_t> memo;
  std::int64_t total = 0;
  for (const auto& [m, c] : a.terms()) total = checked::add(total, checked::mul(c, monomial_degree(m, memo)));
  return total;
}

bool ChowRing::equal_classes(const ChowClass& a, const ChowClass& b) const {
  if (a.grade() != b.grade())
    throw InputError("equal_classes: grades " + std::to_string(a.grade()) + " and " +
                     std::to_string(b.grade()) + " differ");
  return normal_form(to_rational(a - b)).is_zero();
}

bool ChowRing::is_zero(const RationalClass& a) const { return normal_form(a).is_zero(); }

bool ChowRing::equal_by_pairing(const ChowClass& a, const ChowClass& b) const {
  if (a.grade() != b.grade())
    throw InputError("equal_by_pairing: grades " + std::to_string(a.grade()) + " and " +
                     std::to_string(b.grade()) + " differ");
  if (a.grade() > dim()) return true;
  const ChowClass diff = a - b;
  const auto complement = static_cast<std::size_t>(dim() - a.grade());
  std::set<Monomial> duals;
  for (const auto& c : fan_.max_cones()) {
    std::vector<Monomial> subs;
    std::vector<bool> pick(c.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(complement), true);
    do {
      Monomial u;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (pick[i]) u.push_back(c.ray_indices[i]);
      duals.insert(std::move(u));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (const auto& u : duals) {
    const ChowClass dual(static_cast<int>(complement), {{u, 1}});
    if (degree_by_substitution(formal_product(diff, dual)) != 0) return false;
  }
  return true;
}

Monomial parse_monomial(std::string_view text, std::size_t ray_count) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw InputError("empty monomial");
  Monomial out;
  if (compact == "1") return out;

  auto parse_int = [&](std::string_view digits, const char* what) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw InputError(std::string("monomial '") + std::string(text) + "': bad " + what + " '" +
                       std::string(digits) + "'");
    return value;
  };

  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (star != std::string_view::npos && rest.empty())
      throw InputError("monomial '" + std::string(text) + "': trailing '*'");
    if (factor.size() < 2 || factor.front() != 'x')
      throw InputError("monomial '" + std::string(text) + "': expected a factor like x3 or x3^2, got '" +
                       std::string(factor) + "'");
    factor.remove_prefix(1);
    long exponent = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(factor.substr(caret + 1), "exponent");
      factor = factor.substr(0, caret);
    }
    const long var = parse_int(factor, "variable index");
    if (var < 1 || static_cast<std::size_t>(var) > ray_count)
      throw InputError("monomial '" + std::string(text) + "': x" + std::to_string(var) +
                       " out of range (rays are x1..x" + std::to_string(ray_count) + ")");
    if (exponent < 0 || exponent > 64)
      throw InputError("monomial '" + std::string(text) + "': exponent out of range");
    out.insert(out.end(), static_cast<std::size_t>(exponent), static_cast<RayIndex>(var - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_monomial(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (i) out << '*';
    out << 'x' << m[i] + 1;
    if (j - i > 1) out << '^' << j - i;
    i = j;
  }
  return out.str();
}

namespace {

template <typename Coeff>
std::string format_terms(const GradedClass<Coeff>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (m.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << format_monomial(m);
    }
  }
  return out.str();
}

}  // namespace

std::string format_class(const ChowClass& a) { return format_terms(a); }
std::string format_class(const RationalClass& a) { return format_terms(a); }

}  // namespace toric
