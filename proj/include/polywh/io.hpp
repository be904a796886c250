#pragma once

#include <json.hpp>
#include <string>

#include "polywh/coherent.hpp"
#include "polywh/quon.hpp"

namespace polywh {

using Json = nlohmann::json;

Json to_json(const AlgebraSpec& spec);
Json to_json(const Matrix& m);  // row-major [[re, im], ...]
Json to_json(const FockOperators& ops);
Json to_json(const PassageCoeffs& coeffs);
Json to_json(const BosonicState& state);
Json to_json(const GrassmannState& state);
Json to_json(const CheckReport& report);

/// One CSV row per measure check: family, spec, n, value, error estimate.
std::string measure_csv_header();
std::string measure_csv_row(const std::string& family, const AlgebraSpec& spec, int n,
                            double value, double error);

/// Deterministic shortest-roundtrip decimal rendering.
std::string format_double(double v);

}  // namespace polywh
