#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace toric {

/// Integer coordinate vector of a fixed ambient dimension. The tag keeps the
/// lattice N and its dual M from being mixed up at compile time.
template <typename Tag>
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const {
    for (auto c : coords_)
      if (c != 0) return false;
    return true;
  }

  IntVector operator-() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

struct LatticeTag {};
struct CharacterTag {};

/// Element n of the lattice N of one-parameter subgroups.
using LatticePoint = IntVector<LatticeTag>;
/// Element m of the dual lattice M = Hom(N, Z).
using Character = IntVector<CharacterTag>;

/// The dual pairing <m, n>. Throws InputError on dimension mismatch and
/// OverflowError instead of wrapping.
std::int64_t pairing(const Character& m, const LatticePoint& n);

/// True iff the gcd of the entries is 1. Throws InputError for the zero vector.
bool is_primitive(const LatticePoint& n);

/// |det| of the square matrix whose rows are `rays`, by fraction-free
/// (Bareiss) elimination. Returns 0 when the count differs from the ambient
/// dimension or the rays are linearly dependent.
std::int64_t cone_determinant(std::span<const LatticePoint> rays);

/// Signed determinant of a square integer matrix (row-major, n x n).
std::int64_t determinant(std::vector<std::vector<std::int64_t>> rows);

}  // namespace toric
