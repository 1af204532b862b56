#pragma once

#include <json.hpp>

#include "bohl/bohl_function.hpp"
#include "bohl/laplace.hpp"

namespace bohl {

// JSON interchange. Rationals travel as "p" / "p/q" strings; a function is an
// array of term objects
//   {"coeff": {"re","im"}, "power": k,
//    "exponent": {"growth", "freq": {"rat", "gens": {name: coeff}}}}
// a tuple is {"entries": [function...]} and a partial-fraction form is
// {"terms": [{"pole", "order", "residue"}]}.
// Readers validate shape and names and throw JsonError on malformed data.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json gaussian_to_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const nlohmann::json& j);

nlohmann::json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const nlohmann::json& j);

nlohmann::json function_to_json(const BohlFunction& f);
BohlFunction function_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(const BohlTuple& t);
BohlTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json pf_to_json(const PartialFractionForm& pf);
PartialFractionForm pf_from_json(const nlohmann::json& j);

/// Reads an externally supplied transfer function
///   {"numerator": [gaussian...],                       // ascending in s
///    "denominator": [{"pole": exponent, "multiplicity": m}, ...]}
/// with the denominator kept factored; duplicate poles accumulate their
/// multiplicities.
RationalFunction rational_function_from_json(const nlohmann::json& j);

bool is_valid_generator_name(const std::string& name);

}  // namespace bohl
