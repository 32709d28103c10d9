#ifndef CONE_SERIALIZE_HPP
#define CONE_SERIALIZE_HPP

#include <nlohmann/json_fwd.hpp>

#include "cone/qmatrix.hpp"
#include "cone/series.hpp"

// JSON schemas. Integer coefficients travel as decimal strings so consumers
// never need 64-bit (or any fixed-width) integer parsing:
//   IntSeries:        {"order": N, "coeffs": ["1", "9", ...]}
//   RationalFunction: {"numerator": ["1", "5", ...], "a": 4, "b": 0}
//   QMatrix:          [["1/2", "0", ...], ...]
#include <nlohmann/json.hpp>

namespace cone {

nlohmann::json to_json(const IntSeries& s);
IntSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace cone

#endif
