#pragma once

#include <string>

#include <json.hpp>

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/exactalg/matrix.hpp"

namespace heisenkep {

using Json = nlohmann::ordered_json;

/// Scalars serialize as "a/b+c/d*i"; polynomials as degree-ascending arrays of those.
Json to_json(const Scalar& s);
Json to_json(const Poly& p);
/// {"num": [...], "den": [...]}
Json to_json(const RatFunc& f);
Json to_json(const ExactMatrix& m);
Json to_json(const ExactVector& v);
/// {"order": n, "var": name, "coeffs": [a_0, ..., a_n]}
Json to_json(const DiffOperator& op, const std::string& var = "t");

Scalar scalar_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
ExactMatrix matrix_from_json(const Json& j);
DiffOperator diffop_from_json(const Json& j);

}  // namespace heisenkep
