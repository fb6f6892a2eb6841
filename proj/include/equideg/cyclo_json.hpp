#pragma once

// {"order": N, "coeffs": [["num","den"], ...]} with decimal-string integers.

#include <json.hpp>

#include "equideg/cyclo.hpp"

namespace equideg::cyclo {

nlohmann::ordered_json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const SubfieldSpec& f);
SubfieldSpec subfield_from_json(const nlohmann::ordered_json& j);

}  // namespace equideg::cyclo
