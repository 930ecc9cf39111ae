#pragma once

#include <string>

#include <json.hpp>

#include "ratquad/inequalities.hpp"
#include "ratquad/notches.hpp"
#include "ratquad/quadrature.hpp"
#include "ratquad/ratfun.hpp"

namespace ratquad {

using Json = nlohmann::json;

/// Serialize with every float printed to 17 significant digits. Key order is
/// nlohmann's (lexicographic), so identical inputs give byte-identical output.
std::string dump_json17(const Json& j);

// problem-spec schema:
//   rational: {"numerator":[[re,im],...], "poles":[{"re":..,"im":..,"mult":k},...]}
//   SPF:      {"spf_poles":[[re,im],...]}
Json rational_to_json(const RationalFunction& R);
RationalFunction rational_from_json(const Json& j);
Json spf_to_json(const SimplePartialFraction& s);
SimplePartialFraction spf_from_json(const Json& j);

Json notchset_to_json(const NotchSet& ns);
Json quadrature_to_json(const QuadratureResult& q);
Json bound_to_json(const BoundReport& b);

/// Validation entry point for the --from-json mode: recognizes any JSON this
/// tool emits or consumes, throws Error(BadInput) otherwise. Returns a short
/// type tag ("rational", "spf", "notchset", ...).
std::string validate_known_json(const Json& j);

}  // namespace ratquad
