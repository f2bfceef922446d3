#include "toric/lattice.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "toric/checked.hpp"
#include "toric/error.hpp"

namespace toric {

template <typename Tag>
IntVector<Tag> IntVector<Tag>::operator-() const {
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = checked::neg(coords_[i]);
  return IntVector(std::move(out));
}

template class IntVector<LatticeTag>;
template class IntVector<CharacterTag>;

std::int64_t pairing(const Character& m, const LatticePoint& n) {
  if (m.dim() != n.dim())
    throw InputError("pairing: character has dimension " + std::to_string(m.dim()) +
                     " but lattice point has dimension " + std::to_string(n.dim()));
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < m.dim(); ++k) sum = checked::add(sum, checked::mul(m[k], n[k]));
  return sum;
}

bool is_primitive(const LatticePoint& n) {
  if (n.dim() == 0 || n.is_zero()) throw InputError("is_primitive: zero vector has no primitivity");
  std::int64_t g = 0;
  for (auto c : n.coords()) {
    // std::gcd on INT64_MIN is undefined; |INT64_MIN| is not representable.
    if (c == INT64_MIN) throw OverflowError("is_primitive: coordinate out of range");
    g = std::gcd(g, c);
  }
  return g == 1;
}

std::int64_t determinant(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw InputError("determinant: matrix is not square");

  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        const std::int64_t num =
            checked::sub(checked::mul(a[i][j], a[k][k]), checked::mul(a[i][k], a[k][j]));
        a[i][j] = num / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : checked::neg(a[n - 1][n - 1]);
}

std::int64_t cone_determinant(std::span<const LatticePoint> rays) {
  if (rays.empty()) return 0;
  const std::size_t d = rays.front().dim();
  if (rays.size() != d) return 0;
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(d);
  for (const auto& r : rays) {
    if (r.dim() != d) throw InputError("cone_determinant: rays of differing dimension");
    rows.emplace_back(r.coords().begin(), r.coords().end());
  }
  const std::int64_t det = determinant(std::move(rows));
  return det < 0 ? checked::neg(det) : det;
}

}  // namespace toric
