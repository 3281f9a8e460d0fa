#pragma once

// JSON encodings. Polynomials are always written in the canonical text syntax
// produced by to_string and accepted by parse_poly.

#include <string>

#include <json.hpp>

#include "cayley/chow.hpp"
#include "cayley/groebner.hpp"
#include "cayley/harmonic.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

Json to_json(const MultiPoly& f);
Json to_json(const HarmonicDecomposition& d);
Json to_json(const CanonicalCayleyRep& rep);
Json to_json(const IdealBasis& ideal);
Json to_json(const Witness& w, bool certificate);
Json to_json(const HonestResult& h, bool certificate);
Json to_json(const ClassificationReport& r, bool certificate);
Json to_json(const AssociatedCurve& c);
Json to_json(const CurveIdeal& c);

// {"generators": [...], "order": {"kind": "grevlex"} | {"kind": "block", "split": k}}
IdealBasis ideal_from_json(const Json& j, const VarSetPtr& vars);
// {"generators": [forms in x0..x3], "param": [4 polynomials in t]}; "param" optional.
CurveIdeal curve_from_json(const Json& j);
CurveIdeal read_curve_file(const std::string& path);

}  // namespace cayley
