#ifndef ORBICURVE_JSON_IO_HPP
#define ORBICURVE_JSON_IO_HPP

#include <json.hpp>

#include "orbicurve/arithmetic_points.hpp"
#include "orbicurve/function_field.hpp"
#include "orbicurve/orbifold.hpp"
#include "orbicurve/pluriform.hpp"
#include "orbicurve/sextic.hpp"

namespace orbicurve {

// nlohmann::json with std::map keys: object keys serialize sorted, which is
// what the canonical-output contract needs. Exact values go out as strings.
using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const GaussRat& g);
Json to_json(const Poly<Rat>& p);
Json to_json(const Poly<GaussRat>& p);
Json to_json(const BiPoly<Rat>& p);
Json to_json(const Matrix<Rat>& m);
std::string matrix_text(const Matrix<Rat>& m);

Json to_json(const OrbifoldCurve& c);
OrbifoldCurve orbifold_curve_from_json(const Json& j);

Json to_json(const FunctionFieldSection& s);
FunctionFieldSection section_from_json(const Json& j);

Json to_json(const ContactProfile& p);
Json to_json(const HurwitzBound& b);
Json to_json(const HurwitzCertificate& c);
Json to_json(const StarInequality& s);
Json to_json(const BranchesBound& b);
Json to_json(const HeightBounds& h);
Json to_json(const LocalIntersectionReport& r);

Json to_json(const PluriformSystem& sys, bool include_matrix);
Json to_json(const VerificationReport& rep);

Json to_json(const EnumerationReport& rep, bool include_points);
Json to_json(const AbcQuality& q);

Json to_json(const ConstructionReport& rep);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// FNV-1a 64-bit digest, hex encoded.
std::string digest(const std::string& payload);

}  // namespace orbicurve

#endif
