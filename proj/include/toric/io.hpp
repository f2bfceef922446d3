#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "toric/bundle.hpp"
#include "toric/fan.hpp"

namespace toric::io {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError with line and column.
json parse(std::string_view text, std::string_view source);

/// {"dim": d, "rays": [[...], ...], "max_cones": [[i, j, ...], ...]}, 0-based.
/// Field errors become InputError naming the offending field.
Fan fan_from_json(const json& doc);
json fan_to_json(const Fan& fan);

/// A bundle as read from disk. d-tables keep their original table next to
/// the expanded row model.
struct LoadedBundle {
  std::string model;  // "rows", "characters" or "dtable"
  RowModelBundle rows;
  std::optional<DTableBundle> dtable;
};

/// Accepts the three bundle models:
///   {"model":"rows","rank":r,"pairings":[[a_11..a_1s],...]}
///   {"model":"characters","rows":[[m per ray], ...]}
///   {"model":"dtable","characters":[[..],..],"d":[[d per character] per ray]}
/// The d-table form may carry "rank"; otherwise it is read off the first ray.
LoadedBundle bundle_from_json(const json& doc, const Fan& fan);
/// d-table without expansion (no ambiguity check).
DTableBundle dtable_from_json(const json& doc);

json bundle_to_json(const RowModelBundle& e);
json dtable_to_json(const DTableBundle& e);

std::string read_file(const std::string& path);

}  // namespace toric::io
