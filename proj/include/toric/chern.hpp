#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toric/bundle.hpp"
#include "toric/chow.hpp"

namespace toric {

/// Residue of the tautological logarithmic connection along X_j, acting
/// diagonally on the adapted frame s_1..s_r: entry i is -<m_ij, n_j>.
struct ResidueMatrix {
  RayIndex ray = 0;
  std::vector<std::int64_t> diagonal;
};

ResidueMatrix residue_matrix(const RowModelBundle& e, RayIndex ray);

/// Trace of Res_1^{alpha_1} o ... o Res_s^{alpha_s}. Requires alpha_j >= 0.
std::int64_t residue_trace(const RowModelBundle& e, std::span<const int> exponents);

/// Chern root of basis vector i: sum_j a_ij x_j.
ChowClass root_class(const RowModelBundle& e, std::size_t row);

/// N_p = sum_i root_i^p, reduced. Zero for p > d.
ChowClass newton_class(const ChowRing& ring, const RowModelBundle& e, int p);

/// N_p from iterated residues: (-1)^p sum over |alpha| = p of the multinomial
/// coefficient times the residue trace times x^alpha, reduced.
ChowClass newton_class_from_residues(const ChowRing& ring, const RowModelBundle& e, int p);

/// L_m = sum_n d_nm <m, n> x_n for each listed character (formal).
std::vector<ChowClass> dtable_roots(const Fan& fan, const DTableBundle& e);

/// sum_m L_m^p taken literally, before reduction (no grade cap).
ChowClass newton_class_dtable_formal(const Fan& fan, const DTableBundle& e, int p);
/// The same, reduced in the Chow ring.
ChowClass newton_class_dtable(const ChowRing& ring, const DTableBundle& e, int p);

/// c_k as the sum over unordered sets of k distinct characters of the product
/// of their L_m, reduced. Index k of the result is c_k, k = 0..up_to.
std::vector<ChowClass> chern_classes_dtable(const ChowRing& ring, const DTableBundle& e, int up_to);

struct CrossCheck {
  bool newton_identities = false;  // Newton recursion reproduces e_k
  bool first_class = false;        // c_1 == N_1
  bool residue_formula = false;    // residue-trace N_p == root-power N_p
  std::string detail;

  bool ok() const { return newton_identities && first_class && residue_formula; }
};

struct ChernReport {
  std::size_t rank = 0;
  int up_to = 0;
  std::vector<ChowClass> newton;      // N_1..N_d
  std::vector<ChowClass> chern;       // c_0..c_up_to
  std::vector<RationalClass> ch;      // ch_0..ch_up_to
  CrossCheck crosscheck;
};

/// c_k(E) = e_k(root_1..root_r) for k = 0..up_to (<= d), with the Newton
/// identity cross-check. A failed cross-check throws ConsistencyError.
ChernReport chern_classes(const ChowRing& ring, const RowModelBundle& e, int up_to);

/// ch_g = N_g / g!, g = 0..up_to (ch_0 = rank). Reduced, exact rationals.
std::vector<RationalClass> chern_character(const ChowRing& ring, const RowModelBundle& e, int up_to);

/// c_0..c_k from N_1..N_k through j e_j = sum_i (-1)^{i-1} e_{j-i} N_i,
/// computed over Q; integrality of every result is asserted.
std::vector<ChowClass> chern_from_newton(const ChowRing& ring, const std::vector<ChowClass>& newton,
                                         int up_to);

/// Literal character-table formulas against the expanded row model.
struct DTablePathComparison {
  struct Grade {
    int p = 0;
    ChowClass literal_formal, row_formal;    // before reduction
    ChowClass literal, row;                  // reduced
    bool formal_agree = false;
    bool reduced_agree = false;
  };
  std::vector<Grade> newton;               // p = 1..up_to
  std::vector<bool> chern_agree;           // k = 0..up_to, reduced
  bool diverges() const;
};

/// Requires a d-table that expands (ray-independent multiplicities).
DTablePathComparison compare_dtable_paths(const ChowRing& ring, const DTableBundle& e, int up_to);

}  // namespace toric
