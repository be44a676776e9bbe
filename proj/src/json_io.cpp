#include "entwit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace entwit {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(std::string("state spec: missing '") + key + "'");
  return obj.at(key);
}

double number(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number()) throw std::invalid_argument(std::string("state spec: '") + key + "' must be a number");
  return v.get<double>();
}

std::vector<double> number_list(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_array() || v.empty()) throw std::invalid_argument(std::string("state spec: '") + key + "' must be a non-empty array");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) throw std::invalid_argument(std::string("state spec: '") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Complex complex_pair(const json& obj, const char* key) {
  const std::vector<double> v = number_list(obj, key);
  if (v.size() != 2) throw std::invalid_argument(std::string("state spec: '") + key + "' must be [re, im]");
  return {v[0], v[1]};
}

}  // namespace

json to_json(const StateSpec& spec) {
  json params = std::visit(Overloaded{
                               [](const FockPairParams& p) { return json{{"coeffs", p.coeffs}}; },
                               [](const Psi2Params& p) { return json{{"c0", p.c0}}; },
                               [](const VacuumMixtureParams& p) { return json{{"p", p.p}, {"coeffs", p.coeffs}}; },
                               [](const SqueezedParams& p) { return json{{"lambda", p.lambda}}; },
                               [](const BellParams& p) { return json{{"parties", p.parties}}; },
                               [](const SchmidtParams& p) {
                                 return json{{"alpha", {p.alpha.real(), p.alpha.imag()}},
                                             {"beta", {p.beta.real(), p.beta.imag()}}};
                               },
                           },
                           spec.params);
  json out{{"family", family_name(spec)}, {"params", std::move(params)}};
  out["cutoff"] = spec.cutoff ? json(*spec.cutoff) : json(nullptr);
  return out;
}

StateSpec state_spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("state spec must be a JSON object");
  const json& fam = require(j, "family");
  if (!fam.is_string()) throw std::invalid_argument("state spec: 'family' must be a string");
  const std::string family = fam.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw std::invalid_argument("state spec: 'params' must be an object");

  StateSpec spec;
  if (family == "fock_pair") {
    spec.params = FockPairParams{number_list(params, "coeffs")};
  } else if (family == "psi2") {
    spec.params = Psi2Params{number(params, "c0")};
  } else if (family == "vacuum_mixture") {
    spec.params = VacuumMixtureParams{number(params, "p"), number_list(params, "coeffs")};
  } else if (family == "squeezed") {
    spec.params = SqueezedParams{number(params, "lambda")};
  } else if (family == "bell") {
    const json& n = require(params, "parties");
    if (!n.is_number_unsigned()) throw std::invalid_argument("state spec: 'parties' must be a positive integer");
    spec.params = BellParams{n.get<std::size_t>()};
  } else if (family == "schmidt") {
    spec.params = SchmidtParams{complex_pair(params, "alpha"), complex_pair(params, "beta")};
  } else {
    throw std::invalid_argument("state spec: unknown family '" + family + "'");
  }
  if (j.contains("cutoff") && !j.at("cutoff").is_null()) {
    const json& c = j.at("cutoff");
    if (!c.is_number_unsigned() || c.get<std::size_t>() == 0) {
      throw std::invalid_argument("state spec: 'cutoff' must be a positive integer");
    }
    spec.cutoff = c.get<std::size_t>();
  }
  return spec;
}

json to_json(const WitnessReport& report) {
  json details = json::object();
  for (const auto& [k, v] : report.details) details[k] = v;
  json out{{"name", report.name},         {"lhs", report.lhs},   {"rhs", report.rhs}, {"delta", report.delta},
           {"violated", report.violated}, {"details", details}};
  out["V"] = report.ratio ? json(*report.ratio) : json(nullptr);
  return out;
}

json to_json(const ScanResult& scan) {
  return json{{"grid", scan.grid}, {"values", scan.values}, {"argbest", scan.argbest}, {"best", scan.best}};
}

void round_numbers(json& doc, int significant_digits) {
  if (doc.is_number_float()) {
    const double v = doc.get<double>();
    if (!std::isfinite(v)) {
      doc = nullptr;
      return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    double rounded = std::strtod(buf, nullptr);
    if (rounded == 0.0) rounded = 0.0;  // drop negative zero
    doc = rounded;
  } else if (doc.is_array() || doc.is_object()) {
    for (auto& item : doc) round_numbers(item, significant_digits);
  }
}

}  // namespace entwit
