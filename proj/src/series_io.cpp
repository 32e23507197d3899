#include "hurwitz/series_io.hpp"

namespace hurwitz {

namespace {

nlohmann::json rational_array(const std::vector<Rational>& coeffs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c));
  return arr;
}

std::vector<Rational> parse_array(const nlohmann::json& arr) {
  if (!arr.is_array() || arr.empty()) throw SeriesError("coefficients must be a non-empty array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_string()) throw SeriesError("coefficients must be rational strings");
    out.push_back(parse_rational(c.get<std::string>()));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const PowerSeries<Rational>& s) {
  return {{"variable", s.variable()}, {"truncation", s.truncation()}, {"coefficients", rational_array(s.coefficients())}};
}

nlohmann::json to_json(const LaurentSeries<Rational>& s) {
  return {{"variable", s.variable()},
          {"floor", s.floor()},
          {"truncation", s.top()},
          {"coefficients", rational_array(s.coefficients())}};
}

nlohmann::json to_json(const BiSeriesXH& s) {
  auto terms = nlohmann::json::array();
  for (int d = 0; d <= s.x_truncation(); ++d) terms.push_back(to_json(s[d]));
  return {{"variable", "x"}, {"truncation", s.x_truncation()}, {"coefficients", terms}};
}

PowerSeries<Rational> power_series_from_json(const nlohmann::json& j) {
  auto coeffs = parse_array(j.at("coefficients"));
  if (j.at("truncation").get<int>() != static_cast<int>(coeffs.size()) - 1) {
    throw SeriesError("truncation field disagrees with coefficient count");
  }
  return PowerSeries<Rational>(j.at("variable").get<std::string>(), std::move(coeffs));
}

LaurentSeries<Rational> laurent_series_from_json(const nlohmann::json& j) {
  auto coeffs = parse_array(j.at("coefficients"));
  const int floor = j.at("floor").get<int>();
  if (j.at("truncation").get<int>() != floor + static_cast<int>(coeffs.size()) - 1) {
    throw SeriesError("truncation field disagrees with floor and coefficient count");
  }
  return LaurentSeries<Rational>(j.at("variable").get<std::string>(), floor, std::move(coeffs));
}

}  // namespace hurwitz
