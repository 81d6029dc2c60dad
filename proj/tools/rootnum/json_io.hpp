#pragma once

// JSON views of the library's reports and the surface input file.

#include "rootnum/averaging.hpp"
#include "rootnum/builder.hpp"
#include "rootnum/descent.hpp"
#include "rootnum/fiber.hpp"
#include "rootnum/modform.hpp"
#include "rootnum/sieve.hpp"
#include "rootnum/surface.hpp"

#include <json.hpp>

#include <string>

namespace rootnum::cli {

// insertion-ordered, so reports and CSV columns follow the field order below
using json = nlohmann::ordered_json;

/// A surface from {"c4": ..., "c6": ...} or {"j": ..., "d": ...}, in the
/// polynomial text format with variable t.
EllipticSurface surface_from_json(const json& j);
EllipticSurface load_surface(const std::string& path);

json to_json(const Integer& n);
json to_json(const Rational& q);
json to_json(const EllipticSurface& s);
json to_json(const SurfaceAnalysis& a);
json to_json(const FiberReport& r);
json to_json(const AverageReport& r);
json to_json(const CensusReport& r);
json to_json(const TraceReport& r);
json to_json(const FamilyRecipe& r);
json to_json(const WeierstrassTwist& E);
json to_json(const CurvePoint& P);

}  // namespace rootnum::cli
