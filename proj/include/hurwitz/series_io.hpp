#ifndef HURWITZ_SERIES_IO_HPP
#define HURWITZ_SERIES_IO_HPP

#include <json.hpp>

#include "hurwitz/series.hpp"

namespace hurwitz {

// Series travel as {"variable": v, "truncation": D, "coefficients": ["p/q", ...]};
// Laurent series add "floor" and index coefficients from the floor upward.
nlohmann::json to_json(const PowerSeries<Rational>& s);
nlohmann::json to_json(const LaurentSeries<Rational>& s);
nlohmann::json to_json(const BiSeriesXH& s);

PowerSeries<Rational> power_series_from_json(const nlohmann::json& j);
LaurentSeries<Rational> laurent_series_from_json(const nlohmann::json& j);

}  // namespace hurwitz

#endif  // HURWITZ_SERIES_IO_HPP
