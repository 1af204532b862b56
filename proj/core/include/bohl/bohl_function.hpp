#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bohl/exponent.hpp"
#include "bohl/gaussian.hpp"
#include "bohl/genpoly.hpp"

namespace bohl {

/// One summand c * t^power * e^(exponent*t).
struct Term {
    GaussianRational coeff;
    unsigned power = 0;
    Exponent exponent;
};

/// Canonical key of a term: exponent first, then power.
struct TermKey {
    Exponent exponent;
    unsigned power = 0;

    bool operator==(const TermKey& o) const {
        return power == o.power && exponent == o.exponent;
    }
    std::strong_ordering operator<=>(const TermKey& o) const {
        if (auto c = exponent <=> o.exponent; c != 0) return c;
        return power <=> o.power;
    }
};

/// A finite sum of terms c * t^k * e^(lambda*t) in canonical sparse form:
/// unique keys, no zero coefficients, deterministic order. Two functions are
/// equal as functions on the real line iff their term maps are identical.
class BohlFunction {
public:
    using TermMap = std::map<TermKey, GaussianRational>;

    BohlFunction() = default;

    static BohlFunction zero() { return {}; }
    static BohlFunction one() { return constant(GaussianRational(Rational(1))); }
    static BohlFunction constant(GaussianRational c);
    /// c * t^power * e^(exponent*t)
    static BohlFunction term(GaussianRational c, unsigned power, Exponent exponent);
    /// e^(exponent*t)
    static BohlFunction exponential(Exponent exponent) {
        return term(GaussianRational(Rational(1)), 0, std::move(exponent));
    }
    /// Merges like terms, drops zeros, establishes canonical order.
    static BohlFunction normalize(const std::vector<Term>& terms);

    const TermMap& term_map() const { return terms_; }
    std::vector<Term> terms() const;
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const BohlFunction& o) const { return terms_ == o.terms_; }

    BohlFunction operator+(const BohlFunction& o) const;
    BohlFunction operator-(const BohlFunction& o) const { return *this + (-o); }
    BohlFunction operator-() const;
    BohlFunction operator*(const BohlFunction& o) const;
    BohlFunction& operator+=(const BohlFunction& o) { return *this = *this + o; }
    BohlFunction& operator-=(const BohlFunction& o) { return *this = *this - o; }
    BohlFunction& operator*=(const BohlFunction& o) { return *this = *this * o; }

    BohlFunction scaled(const GaussianRational& c) const;
    BohlFunction pow(unsigned n) const;

    /// Exact d/dt. Requires every exponent with nonzero frequency-generator
    /// part to be absent (the factor lambda would leave the Gaussian-rational
    /// coefficient field); throws UnrepresentableError otherwise.
    BohlFunction differentiate() const;

    /// (d/dt - lambda)^m applied to this function. Exponent differences
    /// mu - lambda must be generator-free (they always are when every term
    /// lives at exponent lambda itself).
    BohlFunction apply_annihilator(const Exponent& lambda, unsigned m) const;

    /// The AP projection: c * t^k * e^((a+ib)t) -> c * e^(ibt), merged.
    BohlFunction psi() const;

    /// True iff every term has power 0 and growth 0 (a generalized
    /// trigonometric polynomial).
    bool is_ap_form() const;

    /// Syntactic boundedness decision; equivalent to is_ap_form().
    bool is_bounded() const { return is_ap_form(); }

    /// Units are exactly the single-term functions c * e^(lambda*t).
    bool is_unit() const;
    BohlFunction unit_inverse() const;

    /// Exact f(0).
    GaussianRational eval_at_zero() const;

    std::set<std::string> generators() const;

private:
    void add_term(const TermKey& key, const GaussianRational& coeff);

    TermMap terms_;
};

/// Ordered tuple of Bohl functions, length >= 1.
struct BohlTuple {
    std::vector<BohlFunction> entries;

    std::size_t size() const { return entries.size(); }
    bool operator==(const BohlTuple& o) const = default;
};

/// Substitutes vars[0] -> t and vars[k] -> e^(exponents[k-1]*t) into a
/// polynomial over the named variables. Requires
/// exponents.size() + 1 == vars.size() and every polynomial symbol to appear
/// in vars; throws ArityError otherwise.
BohlFunction from_polynomial_substitution(const GenPoly& p, const std::vector<std::string>& vars,
                                          const std::vector<Exponent>& exponents);

}  // namespace bohl
