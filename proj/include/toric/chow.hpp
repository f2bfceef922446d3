#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toric/checked.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Sorted multiset of ray indices; x0^2*x3 is {0,0,3}.
using Monomial = std::vector<RayIndex>;

namespace detail {
inline std::int64_t coeff_add(std::int64_t a, std::int64_t b) { return checked::add(a, b); }
inline std::int64_t coeff_mul(std::int64_t a, std::int64_t b) { return checked::mul(a, b); }
inline mpq_class coeff_add(const mpq_class& a, const mpq_class& b) { return a + b; }
inline mpq_class coeff_mul(const mpq_class& a, const mpq_class& b) { return a * b; }
}  // namespace detail

/// A homogeneous element of the polynomial ring on the ray variables, read as
/// a class in the Chow ring. Zero coefficients are never stored. No reduction
/// happens here; see ChowRing::reduce.
template <typename Coeff>
class GradedClass {
 public:
  using Terms = std::map<Monomial, Coeff>;

  explicit GradedClass(int grade = 0) : grade_(grade) {}
  GradedClass(int grade, Terms terms) : grade_(grade) {
    for (auto& [m, c] : terms) add_term(m, c);
  }

  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = detail::coeff_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  GradedClass& operator+=(const GradedClass& o) {
    check_grade(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedClass& operator-=(const GradedClass& o) {
    check_grade(o);
    for (const auto& [m, c] : o.terms_) add_term(m, detail::coeff_mul(c, Coeff(-1)));
    return *this;
  }
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator-(const GradedClass& a) { return a * Coeff(-1); }

  friend GradedClass operator*(const GradedClass& a, const Coeff& s) {
    GradedClass out(a.grade_);
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, detail::coeff_mul(c, s));
    return out;
  }
  friend GradedClass operator*(const Coeff& s, const GradedClass& a) { return a * s; }

  /// Formal product with no grade cap.
  friend GradedClass formal_product(const GradedClass& a, const GradedClass& b) {
    GradedClass out(a.grade_ + b.grade_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        m.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        out.add_term(m, detail::coeff_mul(ca, cb));
      }
    }
    return out;
  }

  friend bool operator==(const GradedClass&, const GradedClass&) = default;

 private:
  void check_grade(const GradedClass& o) const {
    if (o.grade_ != grade_)
      throw InputError("cannot add classes of grade " + std::to_string(grade_) + " and " +
                       std::to_string(o.grade_));
  }

  int grade_;
  Terms terms_;
};

/// Integer-coefficient class: the type exposed across the public API.
using ChowClass = GradedClass<std::int64_t>;
/// Exact rational-coefficient class (Chern character, Newton recursion).
using RationalClass = GradedClass<mpq_class>;

RationalClass to_rational(const ChowClass& a);
/// Throws ConsistencyError if some coefficient is not an integer.
ChowClass to_integral(const RationalClass& a, std::string_view what);

/// Normal-form engine for one grade: the face-supported monomials of that
/// grade, with every pivot monomial expressed in terms of the free ones.
struct GradedBasis {
  int grade = 0;
  std::vector<Monomial> monomials;           // face-supported monomials, lexicographic
  std::map<Monomial, std::size_t> index;     // monomial -> position in `monomials`
  std::vector<std::size_t> free_columns;     // representatives of a basis of A^grade
  // pivot column -> its normal form as (free column, coefficient) pairs
  std::map<std::size_t, std::vector<std::pair<std::size_t, mpq_class>>> pivots;
  bool integral = true;  // every pivot expression has integer coefficients
  std::size_t relation_count = 0;

  std::size_t dimension() const { return free_columns.size(); }
};

/// The Chow ring A*(X) of a smooth complete toric variety: polynomials in the
/// ray variables x_0..x_{s-1} modulo Stanley-Reisner monomials and the linear
/// relations sum_j <m, n_j> x_j for m in a basis of M.
///
/// All graded pieces are built at construction; afterwards every member is
/// const and safe to call concurrently.
class ChowRing {
 public:
  /// Throws PreconditionError if the fan is invalid.
  explicit ChowRing(Fan fan);

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim(); }
  std::size_t ray_count() const { return fan_.ray_count(); }

  ChowClass one() const;
  ChowClass zero(int grade) const { return ChowClass(grade); }
  /// x_j as a grade-1 class. Throws InputError for an out-of-range index.
  ChowClass divisor_class(RayIndex j) const;
  /// x_{i_1} ... x_{i_d} for the first maximal cone.
  ChowClass point_class() const;
  /// sum_j <m, n_j> x_j.
  ChowClass linear_relation(const Character& m) const;

  /// Formal product; grades above d collapse to the zero class of grade d.
  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
  RationalClass multiply(const RationalClass& a, const RationalClass& b) const;
  ChowClass power(const ChowClass& a, int p) const;

  /// Canonical representative: reduce(a) == reduce(b) iff a = b in A*(X).
  /// Integrality of the result is asserted.
  ChowClass reduce(const ChowClass& a) const;
  RationalClass reduce(const RationalClass& a) const;

  /// The intersection number of a grade-d class.
  std::int64_t degree(const ChowClass& a) const;
  mpq_class degree(const RationalClass& a) const;

  /// Degree computed by recursive substitution of linear relations, without
  /// the normal-form tables. Used as an independent check.
  std::int64_t degree_by_substitution(const ChowClass& a) const;

  bool equal_classes(const ChowClass& a, const ChowClass& b) const;
  bool is_zero(const RationalClass& a) const;
  /// Equality through Poincare pairings against all squarefree cone monomials
  /// of complementary grade, using degree_by_substitution.
  bool equal_by_pairing(const ChowClass& a, const ChowClass& b) const;

  const GradedBasis& basis(int grade) const;
  std::size_t graded_dimension(int grade) const { return basis(grade).dimension(); }

 private:
  RationalClass normal_form(const RationalClass& a) const;
  std::int64_t monomial_degree(const Monomial& m, std::map<Monomial, std::int64_t>& memo) const;

  Fan fan_;
  std::vector<GradedBasis> bases_;
  mpq_class point_degree_;  // degree of the single free monomial of grade d
};

/// "x1*x2", "x3^2", "1": 1-based ray variables. Throws InputError.
Monomial parse_monomial(std::string_view text, std::size_t ray_count);
/// Inverse of parse_monomial (1-based).
std::string format_monomial(const Monomial& m);
/// "2*x1*x2 - x3^2", or "0".
std::string format_class(const ChowClass& a);
std::string format_class(const RationalClass& a);

}  // namespace toric
