#pragma once

#include <map>
#include <optional>
#include <string>

#include "bohl/gaussian.hpp"

namespace bohl {

/// Monomial over named symbols: name -> power (powers > 0 in canonical form).
using Monomial = std::map<std::string, int>;

/// Multivariate polynomial in formal symbols with Gaussian-rational
/// coefficients, canonical (no zero coefficients). Used both for
/// Laplace-domain coefficients in the frequency generators and for the
/// polynomials fed to substitution.
class GenPoly {
public:
    GenPoly() = default;
    explicit GenPoly(GaussianRational constant);
    GenPoly(long n) : GenPoly(GaussianRational(Rational(n))) {}  // NOLINT: integer literals

    static GenPoly variable(const std::string& name, GaussianRational coeff = GaussianRational(1));

    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    /// Constant value; requires is_constant().
    GaussianRational constant_value() const;

    GenPoly operator+(const GenPoly& o) const;
    GenPoly operator-(const GenPoly& o) const { return *this + (-o); }
    GenPoly operator-() const;
    GenPoly operator*(const GenPoly& o) const;
    GenPoly& operator+=(const GenPoly& o) { return *this = *this + o; }
    GenPoly& operator-=(const GenPoly& o) { return *this = *this - o; }
    GenPoly& operator*=(const GenPoly& o) { return *this = *this * o; }

    GenPoly scaled(const GaussianRational& c) const;
    GenPoly pow(unsigned n) const;

    bool operator==(const GenPoly& o) const { return terms_ == o.terms_; }

    /// The constant c with a == c * b, when such a constant exists.
    static std::optional<GaussianRational> constant_ratio(const GenPoly& a, const GenPoly& b);

    std::string to_string() const;

    /// Inserts coeff * monomial, merging and pruning zeros.
    void add_term(const Monomial& m, const GaussianRational& coeff);

private:
    std::map<Monomial, GaussianRational> terms_;
};

}  // namespace bohl
