#pragma once
// JSON input and text / JSON / LaTeX rendering.

#include <json.hpp>

#include "stringy/stringy.hpp"

namespace stringy {

using json = nlohmann::json;

// Parse errors carry line and column; schema errors carry the JSON path.
DivisorialFan parse_fan(const std::string& text);
DivisorialFan load_fan(const std::string& path);

std::string rat_json(const Rat& r);  // "p/q", q omitted when 1
Rat rat_from_json(const json& j);

json series_json(const LatticeSeries& s);
LatticeSeries series_from_json(const json& j);
json motive_json(const MotiveExpr& e);
MotiveExpr motive_from_json(const json& j);

std::string latex_series(const LatticeSeries& s);
std::string latex_motive(const MotiveExpr& e);
std::string latex_rat(const Rat& r);

}  // namespace stringy
