#pragma once

#include <nlohmann/json.hpp>

#include "cremona/algebra.hpp"
#include "cremona/constructions.hpp"
#include "cremona/cremona.hpp"
#include "cremona/groebner.hpp"

namespace cremona {

using json = nlohmann::json;

// Readers throw StructuralError with a message that starts with the path of
// the offending field, e.g. "components[2].terms[0].exp: ...".
//
// Polynomials are written as {"vars": [...], "terms": [{"num", "den", "exp"}]}
// with integers as decimal strings. Wherever a variable list is known from the
// enclosing object, a polynomial may also be given as a string ("x^2 - y*z").

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& path = "value");
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, const std::string& path = "vector");
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& path = "matrix");

VarsPtr vars_from_json(const json& j, const std::string& path = "vars");

json polynomial_to_json(const Polynomial& p);
/// `context` supplies the variables for string input and is checked against
/// an explicit "vars" field.
Polynomial polynomial_from_json(const json& j, const VarsPtr& context = nullptr, const std::string& path = "polynomial");

json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const json& j, const std::string& path = "ideal");

json map_to_json(const RationalMap& f);
RationalMap map_from_json(const json& j, const std::string& path = "map");

/// Also accepts {"basis": [...], "unit": [...], "products": "e1*e1=e1; ..."}.
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j, const std::string& path = "algebra");

json gluing_to_json(const GluingSpec& s);
GluingSpec gluing_from_json(const json& j, const std::string& path = "glue");

json unipoly_to_json(const UniPoly& p);
json hilbert_to_json(const HilbertData& h);

}  // namespace cremona
