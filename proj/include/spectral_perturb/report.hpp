#pragma once

#include <string>

#include <json.hpp>

#include "spectral_perturb/bounds.hpp"
#include "spectral_perturb/cs.hpp"
#include "spectral_perturb/linalg.hpp"

namespace spectral_perturb::report {

using json = nlohmann::ordered_json;

/// {"method", "lower", "upper", "exact", "slack_lower", "slack_upper"}, absent
/// fields omitted.
json to_json(const bounds::BoundReport& r);
json to_json(const bounds::SpecAnalysis& a);
json to_json(const cs::TailReport& r);
json to_json(const cs::AppendColumnReport& r);
json to_json(const BorderedSpec& spec);
json matrix_to_json(const Matrix& m);

bounds::BoundReport bound_report_from_json(const json& j);
BorderedSpec spec_from_json(const json& j);

/// Two-space indented dump followed by a newline.
std::string dump(const json& j);

}  // namespace spectral_perturb::report
