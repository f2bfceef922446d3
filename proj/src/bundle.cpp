#include "toric/bundle.hpp"

#include <algorithm>

#include "toric/checked.hpp"
#include "toric/error.hpp"

namespace toric {

RowModelBundle::RowModelBundle(std::size_t ray_count, std::vector<std::vector<std::int64_t>> pairings)
    : ray_count_(ray_count), rows_(std::move(pairings)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != ray_count_)
      throw InputError("bundle row " + std::to_string(i) + " has " + std::to_string(rows_[i].size()) +
                       " pairings, expected one per ray (" + std::to_string(ray_count_) + ")");
}

RowModelBundle line_bundle(std::span<const std::int64_t> divisor, std::size_t ray_count) {
  if (divisor.size() != ray_count)
    throw InputError("line_bundle: " + std::to_string(divisor.size()) + " divisor coefficients for " +
                     std::to_string(ray_count) + " rays");
  return RowModelBundle(ray_count, {{divisor.begin(), divisor.end()}});
}

RowModelBundle direct_sum(const RowModelBundle& e, const RowModelBundle& f) {
  if (e.ray_count() != f.ray_count())
    throw InputError("direct_sum: bundles live on fans with " + std::to_string(e.ray_count()) +
                     " and " + std::to_string(f.ray_count()) + " rays");
  auto rows = e.rows();
  rows.insert(rows.end(), f.rows().begin(), f.rows().end());
  return RowModelBundle(e.ray_count(), std::move(rows));
}

RowModelBundle dual(const RowModelBundle& e) {
  auto rows = e.rows();
  for (auto& row : rows)
    for (auto& a : row) a = checked::neg(a);
  return RowModelBundle(e.ray_count(), std::move(rows));
}

RowModelBundle twist(const RowModelBundle& e, std::span<const std::int64_t> shift) {
  if (shift.size() != e.ray_count())
    throw InputError("twist: shift has " + std::to_string(shift.size()) + " entries for " +
                     std::to_string(e.ray_count()) + " rays");
  auto rows = e.rows();
  for (auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = checked::add(row[j], shift[j]);
  return RowModelBundle(e.ray_count(), std::move(rows));
}

RowModelBundle from_ray_characters(const Fan& fan, const std::vector<std::vector<Character>>& rows) {
  std::vector<std::vector<std::int64_t>> pairings;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != fan.ray_count())
      throw InputError("character row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " characters, expected one per ray (" + std::to_string(fan.ray_count()) + ")");
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) row.push_back(pairing(rows[i][j], fan.rays()[j]));
    pairings.push_back(std::move(row));
  }
  return RowModelBundle(fan.ray_count(), std::move(pairings));
}

const char* to_string(DTableViolationKind kind) {
  switch (kind) {
    case DTableViolationKind::shape: return "shape";
    case DTableViolationKind::negative_entry: return "negative_entry";
    case DTableViolationKind::rank_sum: return "rank_sum";
    case DTableViolationKind::duplicate_character: return "duplicate_character";
  }
  return "unknown";
}

bool DTableReport::has(DTableViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const DTableViolation& v) { return v.kind == kind; });
}

DTableReport validate_dtable(const DTableBundle& e) {
  DTableReport report;
  auto& out = report.violations;
  const std::size_t k = e.characters.size();

  for (std::size_t a = 0; a < k; ++a) {
    if (a > 0 && e.characters[a].dim() != e.characters[0].dim())
      out.push_back({DTableViolationKind::shape, -1, static_cast<int>(a),
                     "character " + std::to_string(a) + " has a different dimension"});
    for (std::size_t b = a + 1; b < k; ++b)
      if (e.characters[a] == e.characters[b])
        out.push_back({DTableViolationKind::duplicate_character, -1, static_cast<int>(b),
                       "characters " + std::to_string(a) + " and " + std::to_string(b) + " coincide"});
  }

  for (std::size_t n = 0; n < e.d.size(); ++n) {
    const auto& row = e.d[n];
    if (row.size() != k) {
      out.push_back({DTableViolationKind::shape, static_cast<int>(n), -1,
                     "ray " + std::to_string(n) + " lists " + std::to_string(row.size()) +
                         " multiplicities for " + std::to_string(k) + " characters"});
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (row[c] < 0)
        out.push_back({DTableViolationKind::negative_entry, static_cast<int>(n), static_cast<int>(c),
                       "d at ray " + std::to_string(n) + ", character " + std::to_string(c) +
                           " is negative (" + std::to_string(row[c]) + ")"});
      sum = checked::add(sum, row[c]);
    }
    if (sum != static_cast<std::int64_t>(e.rank))
      out.push_back({DTableViolationKind::rank_sum, static_cast<int>(n), -1,
                     "multiplicities at ray " + std::to_string(n) + " sum to " + std::to_string(sum) +
                         ", expected rank " + std::to_string(e.rank)});
  }
  return report;
}

std::vector<Character> row_characters(const DTableBundle& e) {
  const auto report = validate_dtable(e);
  if (!report.ok()) throw InputError("d-table is invalid: " + report.violations.front().message);
  std::vector<Character> out;
  for (std::size_t c = 0; c < e.characters.size(); ++c) {
    const std::int64_t mu = e.d.empty() ? 0 : e.d.front()[c];
    for (std::size_t n = 1; n < e.d.size(); ++n)
      if (e.d[n][c] != mu)
        throw InputError("ambiguous d-table: character " + std::to_string(c) + " has multiplicity " +
                         std::to_string(mu) + " at ray 0 but " + std::to_string(e.d[n][c]) + " at ray " +
                         std::to_string(n));
    out.insert(out.end(), static_cast<std::size_t>(mu), e.characters[c]);
  }
  if (e.d.empty() && e.rank != 0)
    throw InputError("ambiguous d-table: no rays to read multiplicities from");
  return out;
}

RowModelBundle expand_dtable(const DTableBundle& e, const Fan& fan) {
  if (e.ray_count() != fan.ray_count())
    throw InputError("d-table has " + std::to_string(e.ray_count()) + " rays, fan has " +
                     std::to_string(fan.ray_count()));
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& m : row_characters(e)) {
    std::vector<std::int64_t> row;
    for (const auto& n : fan.rays()) row.push_back(pairing(m, n));
    rows.push_back(std::move(row));
  }
  return RowModelBundle(fan.ray_count(), std::move(rows));
}

DTableBundle regroup(std::span<const Character> row_chars, std::size_t ray_count) {
  DTableBundle out;
  out.rank = row_chars.size();
  std::vector<std::int64_t> mult;
  for (const auto& m : row_chars) {
    auto it = std::find(out.characters.begin(), out.characters.end(), m);
    if (it == out.characters.end()) {
      out.characters.push_back(m);
      mult.push_back(1);
    } else {
      ++mult[static_cast<std::size_t>(it - out.characters.begin())];
    }
  }
  out.d.assign(ray_count, mult);
  return out;
}

}  // namespace toric
