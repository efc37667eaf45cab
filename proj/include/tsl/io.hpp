#pragma once

#include <json.hpp>

#include "tsl/ehrhart.hpp"
#include "tsl/fano.hpp"
#include "tsl/hilbert.hpp"
#include "tsl/obstructions.hpp"
#include "tsl/polytope.hpp"
#include "tsl/projbundle.hpp"

namespace tsl::io {

using Json = nlohmann::json;

// Readers. Integers may be JSON integers or decimal strings; rationals may also be "p/q".
// Schema problems throw InvalidInput naming the offending field.
Integer integer_from_json(const Json& j, std::string_view field);
Rational rational_from_json(const Json& j, std::string_view field);
LatticePolytope polytope_from_json(const Json& j);
Fan fan_from_json(const Json& j);
BundleSpec bundle_from_json(const Json& j);
Json parse(std::string_view text);

// Writers. Rationals are canonical strings; integers in the 53-bit range are numbers.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(std::span<const Rational> v);
Json to_json(const RationalPolynomial& p);
Json to_json(const VectorPolynomial& p);
Json to_json(const LatticePolytope& p);
Json to_json(const ObstructionReport& r);
Json to_json(const LaurentSeries& s);
Json to_json(const SpanComparison& s);
Json to_json(const ExpansionPair& e);
Json to_json(const HilbertWeightTable& t);
Json to_json(const FanoReport& r);
Json to_json(const BundleMeasures& m);
Json to_json(const BundleFunctional& f);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace tsl::io
