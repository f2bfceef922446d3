#include "toric/io.hpp"

#include <fstream>
#include <sstream>

#include "toric/error.hpp"

namespace toric::io {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) field_error("<root>", "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) field_error(key, "missing");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer, got " + v.dump());
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    field_error(field, "integer out of range");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_vector(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const json& as_array(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array");
  return v;
}

std::vector<Character> as_characters(const json& v, const std::string& field) {
  std::vector<Character> out;
  const auto& arr = as_array(v, field);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.emplace_back(as_int_vector(arr[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json parse(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (" + what + ")");
  }
}

Fan fan_from_json(const json& doc) {
  const std::int64_t dim = as_int(require(doc, "dim"), "dim");
  if (dim < 1 || dim > 64) field_error("dim", "must be between 1 and 64, got " + std::to_string(dim));

  std::vector<LatticePoint> rays;
  const auto& jr = as_array(require(doc, "rays"), "rays");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    auto coords = as_int_vector(jr[i], field);
    if (coords.size() != static_cast<std::size_t>(dim))
      field_error(field, "has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(dim));
    rays.emplace_back(std::move(coords));
  }

  std::vector<Cone> cones;
  const auto& jc = as_array(require(doc, "max_cones"), "max_cones");
  for (std::size_t c = 0; c < jc.size(); ++c) {
    const std::string field = "max_cones[" + std::to_string(c) + "]";
    Cone cone;
    for (auto v : as_int_vector(jc[c], field)) {
      if (v < 0 || static_cast<std::size_t>(v) >= rays.size())
        field_error(field, "ray index " + std::to_string(v) + " out of range 0.." +
                               std::to_string(static_cast<std::int64_t>(rays.size()) - 1));
      cone.ray_indices.push_back(static_cast<RayIndex>(v));
    }
    cones.push_back(std::move(cone));
  }
  return Fan(static_cast<int>(dim), std::move(rays), std::move(cones));
}

json fan_to_json(const Fan& fan) {
  json rays = json::array();
  for (const auto& r : fan.rays()) rays.push_back(std::vector<std::int64_t>(r.coords().begin(), r.coords().end()));
  json cones = json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c.ray_indices);
  json out;
  out["dim"] = fan.dim();
  out["rays"] = std::move(rays);
  out["max_cones"] = std::move(cones);
  return out;
}

DTableBundle dtable_from_json(const json& doc) {
  DTableBundle e;
  e.characters = as_characters(require(doc, "characters"), "characters");
  const auto& jd = as_array(require(doc, "d"), "d");
  for (std::size_t n = 0; n < jd.size(); ++n) e.d.push_back(as_int_vector(jd[n], "d[" + std::to_string(n) + "]"));
  if (doc.contains("rank")) {
    const auto r = as_int(doc["rank"], "rank");
    if (r < 0) field_error("rank", "must be non-negative");
    e.rank = static_cast<std::size_t>(r);
  } else if (!e.d.empty()) {
    std::int64_t sum = 0;
    for (auto v : e.d.front()) sum += v;
    e.rank = sum < 0 ? 0 : static_cast<std::size_t>(sum);
  }
  return e;
}

LoadedBundle bundle_from_json(const json& doc, const Fan& fan) {
  const auto& jm = require(doc, "model");
  if (!jm.is_string()) field_error("model", "expected a string");
  const std::string model = jm.get<std::string>();

  if (model == "rows") {
    std::vector<std::vector<std::int64_t>> rows;
    const auto& jp = as_array(require(doc, "pairings"), "pairings");
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const std::string field = "pairings[" + std::to_string(i) + "]";
      rows.push_back(as_int_vector(jp[i], field));
      if (rows.back().size() != fan.ray_count())
        field_error(field, "has " + std::to_string(rows.back().size()) + " entries, the fan has " +
                               std::to_string(fan.ray_count()) + " rays");
    }
    if (doc.contains("rank") && as_int(doc["rank"], "rank") != static_cast<std::int64_t>(rows.size()))
      field_error("rank", "does not match the number of pairing rows (" + std::to_string(rows.size()) + ")");
    return {model, RowModelBundle(fan.ray_count(), std::move(rows)), std::nullopt};
  }
  if (model == "characters") {
    std::vector<std::vector<Character>> rows;
    const auto& jr = as_array(require(doc, "rows"), "rows");
    for (std::size_t i = 0; i < jr.size(); ++i) {
      const std::string field = "rows[" + std::to_string(i) + "]";
      rows.push_back(as_characters(jr[i], field));
      if (rows.back().size() != fan.ray_count())
        field_error(field, "has " + std::to_string(rows.back().size()) + " characters, the fan has " +
                               std::to_string(fan.ray_count()) + " rays");
      for (std::size_t j = 0; j < rows.back().size(); ++j)
        if (rows.back()[j].dim() != static_cast<std::size_t>(fan.dim()))
          field_error(field + "[" + std::to_string(j) + "]", "character has the wrong dimension");
    }
    return {model, from_ray_characters(fan, rows), std::nullopt};
  }
  if (model == "dtable") {
    DTableBundle e = dtable_from_json(doc);
    if (e.ray_count() != fan.ray_count())
      field_error("d", "has " + std::to_string(e.ray_count()) + " ray rows, the fan has " +
                           std::to_string(fan.ray_count()) + " rays");
    for (std::size_t c = 0; c < e.characters.size(); ++c)
      if (e.characters[c].dim() != static_cast<std::size_t>(fan.dim()))
        field_error("characters[" + std::to_string(c) + "]", "character has the wrong dimension");
    auto rows = expand_dtable(e, fan);
    return {model, std::move(rows), std::move(e)};
  }
  field_error("model", "unknown model '" + model + "' (expected rows, characters or dtable)");
}

json bundle_to_json(const RowModelBundle& e) {
  json out;
  out["model"] = "rows";
  out["rank"] = e.rank();
  out["pairings"] = e.rows();
  return out;
}

json dtable_to_json(const DTableBundle& e) {
  json chars = json::array();
  for (const auto& m : e.characters) chars.push_back(std::vector<std::int64_t>(m.coords().begin(), m.coords().end()));
  json out;
  out["model"] = "dtable";
  out["rank"] = e.rank;
  out["characters"] = std::move(chars);
  out["d"] = e.d;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace toric::io
