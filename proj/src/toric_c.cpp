#include "toric/toric.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include "toric/chern.hpp"
#include "toric/curves.hpp"
#include "toric/error.hpp"
#include "toric/examples.hpp"
#include "toric/io.hpp"
#include "toric/report.hpp"

struct toric_fan {
  explicit toric_fan(toric::Fan f) : fan(std::move(f)) {}

  // Built on first use; afterwards read-only.
  const toric::ChowRing& ring() const {
    std::call_once(ring_once, [this] { ring_ptr = std::make_unique<toric::ChowRing>(fan); });
    return *ring_ptr;
  }

  toric::Fan fan;
  mutable std::once_flag ring_once;
  mutable std::unique_ptr<toric::ChowRing> ring_ptr;
};

struct toric_bundle {
  std::size_t ray_count;
  toric::io::LoadedBundle loaded;
};

namespace {

thread_local std::string last_error;

toric_status fail(toric_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, mapping the library's exception types onto status codes.
template <typename Body>
toric_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const toric::InputError& e) {
    return fail(TORIC_INPUT_ERROR, e.what());
  } catch (const toric::OverflowError& e) {
    return fail(TORIC_INPUT_ERROR, e.what());
  } catch (const toric::PreconditionError& e) {
    return fail(TORIC_INVALID, e.what());
  } catch (const toric::ConsistencyError& e) {
    return fail(TORIC_INTERNAL_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(TORIC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TORIC_INTERNAL_ERROR, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw toric::InputError(std::string("null ") + what);
}

// The Chow ring of a fan that must be valid.
const toric::ChowRing& ring_of(const toric_fan* fan) {
  require(fan, "fan");
  if (!fan->fan.is_valid())
    throw toric::PreconditionError("fan is not a smooth complete fan:\n" +
                                   toric::report::validation_text(fan->fan.validation()));
  return fan->ring();
}

void check_pair(const toric_fan* fan, const toric_bundle* bundle) {
  require(bundle, "bundle");
  if (bundle->ray_count != fan->fan.ray_count())
    throw toric::InputError("bundle was loaded for a fan with a different number of rays");
}

int resolve_grade(const toric::ChowRing& ring, int max_grade) {
  if (max_grade < 0) return ring.dim();
  if (max_grade > ring.dim())
    throw toric::InputError("max grade " + std::to_string(max_grade) + " exceeds the dimension " +
                            std::to_string(ring.dim()));
  return max_grade;
}

}  // namespace

extern "C" {

const char* toric_version(void) { return "1.0.0"; }

const char* toric_last_error(void) { return last_error.c_str(); }

void toric_string_free(char* s) { std::free(s); }

toric_status toric_fan_from_json(const char* json, toric_fan** out) {
  return guarded([&] {
    require(json, "json text");
    require(out, "output pointer");
    const auto doc = toric::io::parse(json, "fan");
    *out = new toric_fan(toric::io::fan_from_json(doc));
    return TORIC_OK;
  });
}

toric_status toric_fan_builtin(const char* name, toric_fan** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output pointer");
    *out = new toric_fan(toric::builtin_fan(name));
    return TORIC_OK;
  });
}

void toric_fan_free(toric_fan* fan) { delete fan; }

toric_status toric_fan_to_json(const toric_fan* fan, char** out) {
  return guarded([&] {
    require(fan, "fan");
    require(out, "output pointer");
    *out = duplicate(toric::io::fan_to_json(fan->fan).dump());
    return TORIC_OK;
  });
}

toric_status toric_fan_dim(const toric_fan* fan, int* out) {
  return guarded([&] {
    require(fan, "fan");
    require(out, "output pointer");
    *out = fan->fan.dim();
    return TORIC_OK;
  });
}

toric_status toric_fan_ray_count(const toric_fan* fan, size_t* out) {
  return guarded([&] {
    require(fan, "fan");
    require(out, "output pointer");
    *out = fan->fan.ray_count();
    return TORIC_OK;
  });
}

toric_status toric_fan_validate(const toric_fan* fan, toric_format format, char** report) {
  return guarded([&] {
    require(fan, "fan");
    require(report, "output pointer");
    const auto& r = fan->fan.validation();
    *report = duplicate(format == TORIC_FORMAT_JSON ? toric::report::validation_json(r).dump(2) + "\n"
                                                    : toric::report::validation_text(r));
    if (!r.ok()) return fail(TORIC_INVALID, "fan is not a smooth complete fan");
    return TORIC_OK;
  });
}

toric_status toric_degree(const toric_fan* fan, const char* monomial, int64_t* out) {
  return guarded([&] {
    require(monomial, "monomial");
    require(out, "output pointer");
    const auto& ring = ring_of(fan);
    const auto m = toric::parse_monomial(monomial, ring.ray_count());
    *out = ring.degree(toric::ChowClass(static_cast<int>(m.size()), {{m, 1}}));
    return TORIC_OK;
  });
}

toric_status toric_graded_dimension(const toric_fan* fan, int grade, size_t* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = ring_of(fan).graded_dimension(grade);
    return TORIC_OK;
  });
}

toric_status toric_bundle_from_json(const toric_fan* fan, const char* json, toric_bundle** out) {
  return guarded([&] {
    require(fan, "fan");
    require(json, "json text");
    require(out, "output pointer");
    const auto doc = toric::io::parse(json, "bundle");
    *out = new toric_bundle{fan->fan.ray_count(), toric::io::bundle_from_json(doc, fan->fan)};
    return TORIC_OK;
  });
}

void toric_bundle_free(toric_bundle* bundle) { delete bundle; }

toric_status toric_bundle_rank(const toric_bundle* bundle, size_t* out) {
  return guarded([&] {
    require(bundle, "bundle");
    require(out, "output pointer");
    *out = bundle->loaded.rows.rank();
    return TORIC_OK;
  });
}

toric_status toric_bundle_to_json(const toric_bundle* bundle, char** out) {
  return guarded([&] {
    require(bundle, "bundle");
    require(out, "output pointer");
    const auto& b = bundle->loaded;
    *out = duplicate((b.dtable ? toric::io::dtable_to_json(*b.dtable) : toric::io::bundle_to_json(b.rows)).dump());
    return TORIC_OK;
  });
}

toric_status toric_residue_diagonal(const toric_bundle* bundle, int ray, int64_t* out, size_t capacity) {
  return guarded([&] {
    require(bundle, "bundle");
    const auto res = toric::residue_matrix(bundle->loaded.rows, ray);
    if (capacity < res.diagonal.size())
      throw toric::InputError("output buffer holds " + std::to_string(capacity) + " entries, rank is " +
                              std::to_string(res.diagonal.size()));
    if (!res.diagonal.empty()) require(out, "output buffer");
    std::copy(res.diagonal.begin(), res.diagonal.end(), out);
    return TORIC_OK;
  });
}

toric_status toric_chern_report(const toric_fan* fan, const toric_bundle* bundle, int max_grade,
                                toric_format format, char** out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto& ring = ring_of(fan);
    check_pair(fan, bundle);
    const auto report = toric::chern_classes(ring, bundle->loaded.rows, resolve_grade(ring, max_grade));
    const auto& dtable = bundle->loaded.dtable;
    if (format == TORIC_FORMAT_JSON) {
      auto doc = toric::report::chern_json(ring, report);
      if (dtable)
        doc["dtable_paths"] = toric::report::dtable_comparison_json(
            ring, toric::compare_dtable_paths(ring, *dtable, report.up_to));
      *out = duplicate(doc.dump(2) + "\n");
    } else {
      std::string text = toric::report::chern_text(ring, report);
      if (dtable)
        text += toric::report::dtable_comparison_text(toric::compare_dtable_paths(ring, *dtable, report.up_to));
      *out = duplicate(text);
    }
    return TORIC_OK;
  });
}

toric_status toric_ch_report(const toric_fan* fan, const toric_bundle* bundle, int max_grade, toric_format format,
                             char** out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto& ring = ring_of(fan);
    check_pair(fan, bundle);
    const auto ch = toric::chern_character(ring, bundle->loaded.rows, resolve_grade(ring, max_grade));
    *out = duplicate(format == TORIC_FORMAT_JSON ? toric::report::ch_json(ring, ch).dump(2) + "\n"
                                                 : toric::report::ch_text(ring, ch));
    return TORIC_OK;
  });
}

toric_status toric_curves_report(const toric_fan* fan, const toric_bundle* bundle, toric_format format, char** out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto& ring = ring_of(fan);
    check_pair(fan, bundle);
    const auto verdict = toric::semistability_verdict(ring, bundle->loaded.rows);
    *out = duplicate(format == TORIC_FORMAT_JSON ? toric::report::verdict_json(verdict).dump(2) + "\n"
                                                 : toric::report::verdict_text(verdict));
    return TORIC_OK;
  });
}

toric_status toric_top_chern_degree(const toric_fan* fan, const toric_bundle* bundle, int64_t* out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto& ring = ring_of(fan);
    check_pair(fan, bundle);
    const auto report = toric::chern_classes(ring, bundle->loaded.rows, ring.dim());
    *out = ring.degree(report.chern.back());
    return TORIC_OK;
  });
}

}  // extern "C"
