#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// An equivariant bundle given by a basis v_1..v_r and, for each ray j, the
/// pairing a_ij = <m_ij, n_j> of the character carried by v_i near X_j.
///
/// Sign convention: row i is the coefficient vector of the Chern root
/// sum_j a_ij [X_j]. The residue of the logarithmic connection along X_j then
/// acts on v_i by -a_ij. With this convention O(sum_j a_j X_j) is the rank-1
/// bundle with row (a_1..a_s) and c_1 = sum_j a_j [X_j].
class RowModelBundle {
 public:
  RowModelBundle(std::size_t ray_count, std::vector<std::vector<std::int64_t>> pairings);
  /// The rank-0 bundle on a fan with `ray_count` rays.
  static RowModelBundle zero(std::size_t ray_count) { return RowModelBundle(ray_count, {}); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ray_count() const { return ray_count_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  std::int64_t pairing(std::size_t row, std::size_t ray) const { return rows_.at(row).at(ray); }

  friend bool operator==(const RowModelBundle&, const RowModelBundle&) = default;

 private:
  std::size_t ray_count_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// O(sum_j a_j X_j).
RowModelBundle line_bundle(std::span<const std::int64_t> divisor, std::size_t ray_count);
/// Throws InputError when the two bundles live on different ray counts.
RowModelBundle direct_sum(const RowModelBundle& e, const RowModelBundle& f);
/// E*: every pairing negated.
RowModelBundle dual(const RowModelBundle& e);
/// E (x) O(sum_j shift_j X_j): `shift` added to every row.
RowModelBundle twist(const RowModelBundle& e, std::span<const std::int64_t> shift);
/// Rows given as one character per ray; each is paired with its ray on load.
RowModelBundle from_ray_characters(const Fan& fan, const std::vector<std::vector<Character>>& rows);

/// Character-table description: d[n][k] = dim of the isotypical component of
/// characters[k] in the representation attached to ray n.
struct DTableBundle {
  std::size_t rank = 0;
  std::vector<Character> characters;
  std::vector<std::vector<std::int64_t>> d;  // ray-major: d[ray][character]

  std::size_t ray_count() const { return d.size(); }
  friend bool operator==(const DTableBundle&, const DTableBundle&) = default;
};

enum class DTableViolationKind { shape, negative_entry, rank_sum, duplicate_character };

const char* to_string(DTableViolationKind kind);

struct DTableViolation {
  DTableViolationKind kind;
  int ray = -1;        // 0-based, -1 when not ray-specific
  int character = -1;  // 0-based, -1 when not character-specific
  std::string message;
};

struct DTableReport {
  std::vector<DTableViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(DTableViolationKind kind) const;
};

DTableReport validate_dtable(const DTableBundle& e);

/// One global character per basis vector: characters[k] repeated mu_k times.
/// Requires a valid table whose multiplicities do not depend on the ray;
/// otherwise throws InputError ("ambiguous d-table").
std::vector<Character> row_characters(const DTableBundle& e);

/// Flattens a d-table into the row model: the row of character m is
/// (<m, n_1>, ..., <m, n_s>), repeated with its multiplicity.
RowModelBundle expand_dtable(const DTableBundle& e, const Fan& fan);

/// Groups per-row characters back into a table (characters in first-seen
/// order, multiplicity constant across rays).
DTableBundle regroup(std::span<const Character> row_chars, std::size_t ray_count);

}  // namespace toric
