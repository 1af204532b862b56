#include "bohl/json_io.hpp"

#include <cctype>

#include "bohl/errors.hpp"

namespace bohl {

using nlohmann::json;

bool is_valid_generator_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    if (name == "i" || name == "t" || name == "exp") return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw JsonError("expected a rational string, got " + j.dump());
    return Rational::from_string(j.get<std::string>());
}

json gaussian_to_json(const GaussianRational& g) {
    return json{{"re", rational_to_json(g.re())}, {"im", rational_to_json(g.im())}};
}

GaussianRational gaussian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw JsonError("expected {re, im}, got " + j.dump());
    return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

json exponent_to_json(const Exponent& e) {
    json gens = json::object();
    for (const auto& [name, coeff] : e.frequency().generator_coords())
        gens[name] = rational_to_json(coeff);
    return json{{"growth", rational_to_json(e.growth())},
                {"freq", {{"rat", rational_to_json(e.frequency().rational_part())},
                          {"gens", std::move(gens)}}}};
}

Exponent exponent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("growth") || !j.contains("freq"))
        throw JsonError("expected {growth, freq}, got " + j.dump());
    const json& freq = j.at("freq");
    if (!freq.is_object() || !freq.contains("rat") || !freq.contains("gens"))
        throw JsonError("expected freq to be {rat, gens}, got " + freq.dump());
    const json& gens = freq.at("gens");
    if (!gens.is_object()) throw JsonError("expected gens to be an object, got " + gens.dump());
    std::map<std::string, Rational> coords;
    for (const auto& [name, value] : gens.items()) {
        if (!is_valid_generator_name(name))
            throw JsonError("invalid generator name '" + name + "'");
        coords.emplace(name, rational_from_json(value));
    }
    return {rational_from_json(j.at("growth")),
            FreqVector(rational_from_json(freq.at("rat")), std::move(coords))};
}

json function_to_json(const BohlFunction& f) {
    json out = json::array();
    for (const auto& [key, coeff] : f.term_map()) {
        out.push_back(json{{"coeff", gaussian_to_json(coeff)},
                           {"power", key.power},
                           {"exponent", exponent_to_json(key.exponent)}});
    }
    return out;
}

BohlFunction function_from_json(const json& j) {
    if (!j.is_array()) throw JsonError("expected an array of terms, got " + j.dump());
    std::vector<Term> terms;
    terms.reserve(j.size());
    for (const json& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("power") ||
            !term.contains("exponent"))
            throw JsonError("expected {coeff, power, exponent}, got " + term.dump());
        const json& power = term.at("power");
        if (!power.is_number_integer() || power.get<long long>() < 0)
            throw JsonError("term power must be a nonnegative integer, got " + power.dump());
        terms.push_back({gaussian_from_json(term.at("coeff")), power.get<unsigned>(),
                         exponent_from_json(term.at("exponent"))});
    }
    return BohlFunction::normalize(terms);
}

json tuple_to_json(const BohlTuple& t) {
    json entries = json::array();
    for (const BohlFunction& f : t.entries) entries.push_back(function_to_json(f));
    return json{{"entries", std::move(entries)}};
}

BohlTuple tuple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw JsonError("expected {entries: [...]}, got " + j.dump());
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.empty())
        throw JsonError("tuple needs a nonempty entries array");
    BohlTuple out;
    out.entries.reserve(entries.size());
    for (const json& f : entries) out.entries.push_back(function_from_json(f));
    return out;
}

json pf_to_json(const PartialFractionForm& pf) {
    json terms = json::array();
    for (const auto& [key, residue] : pf.terms()) {
        terms.push_back(json{{"pole", exponent_to_json(key.pole)},
                             {"order", key.order},
                             {"residue", gaussian_to_json(residue)}});
    }
    return json{{"terms", std::move(terms)}};
}

PartialFractionForm pf_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw JsonError("expected {terms: [...]}, got " + j.dump());
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw JsonError("expected terms to be an array");
    PartialFractionForm out;
    for (const json& term : terms) {
        if (!term.is_object() || !term.contains("pole") || !term.contains("order") ||
            !term.contains("residue"))
            throw JsonError("expected {pole, order, residue}, got " + term.dump());
        const json& order = term.at("order");
        if (!order.is_number_integer() || order.get<long long>() <= 0)
            throw JsonError("partial-fraction order must be a positive integer");
        out.add_residue(exponent_from_json(term.at("pole")), order.get<unsigned>(),
                        gaussian_from_json(term.at("residue")));
    }
    return out;
}

RationalFunction rational_function_from_json(const json& j) {
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
        throw JsonError("expected {numerator, denominator}, got " + j.dump());
    const json& numerator = j.at("numerator");
    if (!numerator.is_array()) throw JsonError("numerator must be an array of coefficients");
    RationalFunction out;
    std::vector<GenPoly> coeffs;
    coeffs.reserve(numerator.size());
    for (const json& c : numerator) coeffs.emplace_back(gaussian_from_json(c));
    out.numerator = SPoly(std::move(coeffs));

    const json& denominator = j.at("denominator");
    if (!denominator.is_array()) throw JsonError("denominator must be an array of factors");
    for (const json& factor : denominator) {
        if (!factor.is_object() || !factor.contains("pole") || !factor.contains("multiplicity"))
            throw JsonError("expected {pole, multiplicity}, got " + factor.dump());
        const json& mult = factor.at("multiplicity");
        if (!mult.is_number_integer() || mult.get<long long>() <= 0)
            throw JsonError("factor multiplicity must be a positive integer");
        out.denominator_factors[exponent_from_json(factor.at("pole"))] += mult.get<unsigned>();
    }
    return out;
}

}  // namespace bohl
