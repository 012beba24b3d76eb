#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "peirce/algebra.h"
#include "peirce/identity.h"
#include "peirce/verify.h"

namespace peirce {

// Malformed identity or algebra document.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

// Rationals are serialized as strings "num/den" (or "num"). Plain JSON
// integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const Poly1& f);  // {"text": ..., "coefficients": [...]}, ascending
Json to_json(const Poly3& f);  // {"text": ..., "terms": [{"a","b","p","coeff"}]}

// Identity document:
//   {"name": str?, "terms": [{"coeff": "n/d", "monomial": str,
//                             "weight": W?}]}
// with W one of {"kind": "constant"}, {"kind": "baric", "k": int},
// {"kind": "bilinear", "monomial": str}, or, for products of identities,
// {"kind": "product", "k": int, "bilinear": [str, ...]}.
// Throws FormatError, ParseError, or the IdentityError raised by validation.
WeightedIdentity identity_from_json(const Json& j);
Json to_json(const WeightedIdentity& identity);

// Algebra document:
//   {"name": str?, "dim": n, "structure": [[[...]]], "bilinear_form": [[...]]?,
//    "weight": [...]?, "idempotents": [[...], ...]?}
// Throws FormatError or AlgebraError.
StructureAlgebra algebra_from_json(const Json& j);
Json to_json(const StructureAlgebra& alg);

Json to_json(const SpectrumReport& report);
Json to_json(const FusionTable& table);
Json to_json(const PeirceDecomposition& decomp);

}  // namespace peirce
