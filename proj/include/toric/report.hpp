#pragma once

#include <string>

#include "toric/chern.hpp"
#include "toric/curves.hpp"
#include "toric/io.hpp"

namespace toric::report {

using io::json;

// Classes serialize as {"grade", "terms": [{"monomial": [0-based], "coeff"}],
// "text"} plus "degree" at the top grade. Terms are ordered lexicographically
// by ray indices, so output is stable across runs.
json class_json(const ChowRing& ring, const ChowClass& a);
json class_json(const ChowRing& ring, const RationalClass& a);

json validation_json(const ValidationReport& r);
std::string validation_text(const ValidationReport& r);

json chern_json(const ChowRing& ring, const ChernReport& r);
std::string chern_text(const ChowRing& ring, const ChernReport& r);

json ch_json(const ChowRing& ring, const std::vector<RationalClass>& ch);
std::string ch_text(const ChowRing& ring, const std::vector<RationalClass>& ch);

json verdict_json(const SemistabilityVerdict& v);
std::string verdict_text(const SemistabilityVerdict& v);

json dtable_comparison_json(const ChowRing& ring, const DTablePathComparison& c);
std::string dtable_comparison_text(const DTablePathComparison& c);

}  // namespace toric::report
