#include "bohl/parser.hpp"

namespace bohl {

namespace {

// One additive piece of the linear form multiplying t in an exponential
// argument: "2", "i", "-i", "3*i", "i*w1", "-2/3*i*w2".
void append_piece(std::vector<std::string>& pieces, const Rational& coeff, bool imaginary,
                  const std::string& generator) {
    if (coeff.is_zero()) return;
    std::string s;
    Rational m = coeff.abs();
    bool unit = m == Rational(1);
    if (coeff.is_negative()) s += "-";
    if (!imaginary) {
        s += m.to_string();
    } else {
        if (!unit) s += m.to_string() + "*";
        s += "i";
        if (!generator.empty()) s += "*" + generator;
    }
    pieces.push_back(std::move(s));
}

std::string exponent_argument(const Exponent& e) {
    std::vector<std::string> pieces;
    append_piece(pieces, e.growth(), false, "");
    append_piece(pieces, e.frequency().rational_part(), true, "");
    for (const auto& [name, coeff] : e.frequency().generator_coords())
        append_piece(pieces, coeff, true, name);

    if (pieces.size() == 1) {
        const std::string& p = pieces.front();
        if (p == "1") return "t";
        if (p == "-1") return "-t";
        return p + "*t";
    }
    std::string joined = pieces.front();
    for (std::size_t k = 1; k < pieces.size(); ++k) {
        const std::string& p = pieces[k];
        joined += p.front() == '-' ? "-" + p.substr(1) : "+" + p;
    }
    return "(" + joined + ")*t";
}

// Magnitude rendering of a coefficient known not to be negative-leaning,
// suitable as a multiplicative factor; empty for 1.
std::string coefficient_factor(const GaussianRational& c, bool has_other_factors) {
    if (c.is_real()) {
        if (c.re() == Rational(1) && has_other_factors) return "";
        return c.re().to_string();
    }
    if (c.re().is_zero()) {
        if (c.im() == Rational(1)) return "i";
        return c.im().to_string() + "*i";
    }
    return "(" + c.to_string() + ")";
}

}  // namespace

std::string format(const BohlFunction& f) {
    if (f.is_zero()) return "0";

    std::string out;
    const auto& terms = f.term_map();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [key, coeff] = *it;

        bool negative = (coeff.is_real() && coeff.re().is_negative()) ||
                        (coeff.re().is_zero() && coeff.im().is_negative());
        GaussianRational magnitude = negative ? -coeff : coeff;

        std::vector<std::string> factors;
        bool has_shape = key.power > 0 || !key.exponent.is_zero();
        std::string c = coefficient_factor(magnitude, has_shape);
        if (!c.empty()) factors.push_back(std::move(c));
        if (key.power == 1)
            factors.push_back("t");
        else if (key.power > 1)
            factors.push_back("t^" + std::to_string(key.power));
        if (!key.exponent.is_zero())
            factors.push_back("exp(" + exponent_argument(key.exponent) + ")");

        std::string rendered;
        for (const std::string& factor : factors) {
            if (!rendered.empty()) rendered += "*";
            rendered += factor;
        }
        if (rendered.empty()) rendered = "1";

        if (out.empty()) {
            // A leading "-t^4" would re-parse as (-t)^4; spell out the unit
            // coefficient so the sign applies to it instead.
            if (negative && rendered.rfind("t^", 0) == 0) rendered = "1*" + rendered;
            out = negative ? "-" + rendered : rendered;
        } else {
            out += (negative ? " - " : " + ") + rendered;
        }
    }
    return out;
}

}  // namespace bohl
