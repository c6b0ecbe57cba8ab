#pragma once

// JSON renderings of every report type. Exact values are "p/q" strings;
// floats from the degeneration checker are rounded to 12 significant
// digits. Field order is fixed, so output is byte-stable.

#include "json.hpp"
#include "nadyn/crucial.hpp"
#include "nadyn/degeneration.hpp"
#include "nadyn/equidist.hpp"
#include "nadyn/redux.hpp"

namespace nadyn {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const TypeIIPoint& p);
Json to_json(const DirectionClass& c);
Json to_json(const DepthDivisor& d);
Json to_json(const CoeffReduction& r);
Json to_json(const IntrinsicReduction& r);
Json to_json(const SlopeReport& s);
Json to_json(const MinLocusResult& m);
Json to_json(const DirectionMeasure& m);
Json to_json(const ConvergenceReport& r);
Json to_json(const DegenerationReport& r);

/// Inverse of to_json(DirectionClass).
DirectionClass class_from_json(const Json& j);

/// {"atoms":[{<class>,"mass":"p/q"},...]} with an optional "point_mass".
DirectionMeasure measure_from_json(const Json& j);

double round12(double x);

}  // namespace nadyn
