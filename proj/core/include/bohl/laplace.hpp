#pragma once

#include <map>
#include <string>
#include <vector>

#include "bohl/bohl_function.hpp"
#include "bohl/exponent.hpp"
#include "bohl/genpoly.hpp"

namespace bohl {

/// Polynomial in the transform variable s with GenPoly coefficients
/// (coefficients may involve the formal frequency generators once poles are
/// expanded). Canonical: no trailing zero coefficients, empty = 0.
class SPoly {
public:
    SPoly() = default;
    explicit SPoly(GenPoly constant);
    explicit SPoly(std::vector<GenPoly> ascending_coeffs);

    /// s - lambda
    static SPoly linear_factor(const Exponent& pole);
    static SPoly s();

    const std::vector<GenPoly>& coeffs() const { return coeffs_; }
    /// Degree in s; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const { return *this + (-o); }
    SPoly operator-() const;
    SPoly operator*(const SPoly& o) const;
    SPoly& operator+=(const SPoly& o) { return *this = *this + o; }
    SPoly& operator-=(const SPoly& o) { return *this = *this - o; }
    SPoly& operator*=(const SPoly& o) { return *this = *this * o; }

    SPoly scaled(const GenPoly& c) const;
    SPoly pow(unsigned n) const;
    /// d/ds
    SPoly derivative() const;
    /// Substitutes s by a GenPoly value.
    GenPoly eval(const GenPoly& point) const;

    bool operator==(const SPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim();
    std::vector<GenPoly> coeffs_;  // coeffs_[k] multiplies s^k
};

/// The exponent value as a polynomial in the frequency generators:
/// growth + i*rational_part plus i*coeff per generator.
GenPoly exponent_to_genpoly(const Exponent& e);

/// Pole of a partial-fraction term, with its order.
struct PoleKey {
    Exponent pole;
    unsigned order = 1;

    bool operator==(const PoleKey& o) const { return order == o.order && pole == o.pole; }
    std::strong_ordering operator<=>(const PoleKey& o) const {
        if (auto c = pole <=> o.pole; c != 0) return c;
        return order <=> o.order;
    }
};

/// Sum of residue / (s - pole)^order terms, canonical (no zero residues).
class PartialFractionForm {
public:
    using TermMap = std::map<PoleKey, GaussianRational>;

    PartialFractionForm() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_residue(const Exponent& pole, unsigned order, const GaussianRational& residue);

    /// Residue-wise merge.
    PartialFractionForm operator+(const PartialFractionForm& o) const;

    bool operator==(const PartialFractionForm& o) const { return terms_ == o.terms_; }

    /// "2/(s - 3)^3 + 1/(s - i)" style display.
    std::string to_string() const;

private:
    TermMap terms_;
};

/// A rational function in s with the denominator kept factored as a
/// pole -> multiplicity map; never expanded destructively.
struct RationalFunction {
    SPoly numerator;
    std::map<Exponent, unsigned> denominator_factors;

    /// Product of (s - pole)^multiplicity, expanded on demand.
    SPoly denominator_expanded() const;
    unsigned denominator_degree() const;
};

/// Term-by-term transform: c * t^k * e^(lambda t) -> c*k! / (s - lambda)^(k+1).
PartialFractionForm laplace(const BohlFunction& f);

/// Exact inverse of the term-by-term transform; inverse_laplace(laplace(f)) == f.
BohlFunction inverse_laplace(const PartialFractionForm& pf);

/// Puts the form over the common denominator prod (s - pole)^max_order with an
/// exactly expanded numerator. The result is strictly proper.
RationalFunction pf_to_rational(const PartialFractionForm& pf);

/// Residues by the derivative rule at each pole. Requires a strictly proper
/// input with every residue landing in the Gaussian rationals; throws
/// NotStrictlyProperError / UnrepresentableError otherwise.
PartialFractionForm partial_fractions(const RationalFunction& rf);

bool is_strictly_proper(const RationalFunction& rf);

/// Cross-multiplied equality: num(a)*den(b) == num(b)*den(a).
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace bohl
