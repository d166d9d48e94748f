#pragma once

#include <string>

#include <json.hpp>

#include "polyrad/cases.hpp"
#include "polyrad/index.hpp"
#include "polyrad/optim.hpp"
#include "polyrad/poly.hpp"
#include "polyrad/range.hpp"

namespace polyrad {

using Json = nlohmann::json;

// Every reader throws InputError on malformed input.

Json to_json(const Space &s);
Space space_from_json(const Json &j);

/// Real fields write numbers, complex fields write [re, im] pairs.
Json vector_to_json(Field field, std::span<const Scalar> v);
Vector vector_from_json(Field field, const Json &j);
Json scalar_to_json(Field field, Scalar z);

/// Canonical order (out, then alpha); "im" is always written.
Json to_json(const HomPoly &p);
HomPoly poly_from_json(const Json &j);

HomPoly read_poly_file(const std::string &path);
void write_poly_file(const std::string &path, const HomPoly &p);

Json to_json(const NormEstimate &e, Field field);
Json to_json(const RadiusEstimate &e, Field field);
Json to_json(const RangeCloud &c, Field field);
Json to_json(const IndexEstimate &e);
Json to_json(const CaseReport &r);

/// "re,im" header and one row per point.
std::string cloud_csv(const RangeCloud &c);

/// Reads the "optim" object and the range keys (delta_ladder, theta_points,
/// cross_tol, attain_eta, face_tol) on top of the defaults.
RangeConfig config_from_json(const Json &j);

} // namespace polyrad
