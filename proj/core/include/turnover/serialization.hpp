#pragma once

#include <string>
#include <vector>

#include "turnover/characters.hpp"
#include "turnover/cohomology.hpp"
#include "turnover/cusps.hpp"
#include "turnover/representation.hpp"

namespace turnover {

// 17 significant digits round-trip a double exactly.
std::string format_double(double x);

// Exact values as rational/radical strings, floating values at full
// round-trip precision.
std::string scalar_to_string(const Scalar& x);
Scalar scalar_from_string(const std::string& text, Backend backend);

std::string representation_to_json(const Representation& rho, int indent = 2);
Representation representation_from_json(const std::string& json_text);

std::string cohomology_report_to_json(const CohomologyReport& report,
                                      const TurnoverPresentation& pres, int indent = 2);
std::string cusp_verdict_to_json(const CuspVerdict& verdict, int indent = 2);
std::string frame_report_to_json(const FrameReport& report, int indent = 2);
std::string isolated_enumeration_to_json(const IsolatedEnumeration& e, int indent = 2);

// Header row plus one row per sample, deterministic byte for byte.
std::string surface_csv(const std::vector<SurfaceSample>& samples);

} // namespace turnover
