#pragma once

#include <string_view>

#include <json.hpp>

#include "thetalgr/lagrangian.hpp"
#include "thetalgr/linalg.hpp"
#include "thetalgr/matrix.hpp"
#include "thetalgr/rational.hpp"
#include "thetalgr/symplectic.hpp"
#include "thetalgr/weyl.hpp"

namespace thetalgr {

using Json = nlohmann::ordered_json;

/// Parses text as JSON. Throws Error(kParse) on malformed input.
Json parse_json(std::string_view text);

Json to_json(const Rational& r);
/// Accepts a rational string or a JSON integer.
Rational rational_from_json(const Json& j);

/// {"rows": r, "cols": c, "data": [[...], ...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"n": n, "rep": <matrix>}. Throws Error(kInvariant) for a non-Lagrangian
/// matrix and Error(kParse) for a malformed document.
Json to_json(const LagrangianPoint& p);
LagrangianPoint point_from_json(const Json& j);

/// Sorted integer array.
Json to_json(const Subset& s);
Subset subset_from_json(const Json& j);

Json to_json(const StratumSignature& s);

/// {"1,4": "r", ...}
Json to_json(const PluckerVector& v);

/// {"n": n, "a": {"p,q": "r", ...}}
Json to_json(const UStarParams& p);
UStarParams ustar_from_json(const Json& j);

Json to_json(const SignedPermutation& w);
SignedPermutation perm_from_json(const Json& j);

Json to_json(const LdlFactorization& f);

}  // namespace thetalgr
