#pragma once

#include <json.hpp>

#include "qdulac/expand.hpp"
#include "qdulac/polygon.hpp"
#include "qdulac/series.hpp"
#include "qdulac/truncate.hpp"

namespace qdulac::cli {

using nlohmann::json;

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const Point& p);
Point point_from_json(const json& j);

/// [{coef:"p/m", monomial:{"a3":2}}, ...]
json to_json(const ParamPoly& p);
ParamPoly poly_from_json(const json& j);

/// [{t_power:n, coeff:<poly>}, ...], highest power first.
json beta_json(const UPoly& beta);
UPoly beta_from_json(const json& j);

json face_json(const Face& face);
json polygon_json(const NewtonPolygon& polygon);
json analysis_json(const FaceAnalysis& analysis);
json solution_json(const TruncatedSolution& ts);
json expansion_json(const ExpansionResult& result, const TruncatedSolution& ts);

/// Series (base c x^r plus terms) stored in an expansion document.
PowerLogSeries series_from_json(const json& expansion);

} // namespace qdulac::cli
