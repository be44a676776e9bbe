#pragma once

// Canonical JSON encodings of the library's records.

#include <json.hpp>

#include "entwit/optimize.hpp"
#include "entwit/states.hpp"
#include "entwit/witnesses.hpp"

namespace entwit {

// {"family": ..., "params": {...}, "cutoff": D | null}
nlohmann::json to_json(const StateSpec& spec);
// Throws std::invalid_argument on unknown families or malformed parameters.
StateSpec state_spec_from_json(const nlohmann::json& j);

// {"name", "lhs", "rhs", "delta", "V" (nullable), "violated", "details"}
nlohmann::json to_json(const WitnessReport& report);

// {"grid", "values", "argbest", "best"}
nlohmann::json to_json(const ScanResult& scan);

// Rounds every floating-point number in the document to the given number of
// significant digits, so serialized output stays short and stable.
void round_numbers(nlohmann::json& doc, int significant_digits = 12);

}  // namespace entwit
