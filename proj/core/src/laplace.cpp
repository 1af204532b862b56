#include "bohl/laplace.hpp"

#include "bohl/errors.hpp"

namespace bohl {

SPoly::SPoly(GenPoly constant) {
    coeffs_.push_back(std::move(constant));
    trim();
}

SPoly::SPoly(std::vector<GenPoly> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

SPoly SPoly::linear_factor(const Exponent& pole) {
    return SPoly({-exponent_to_genpoly(pole), GenPoly(1)});
}

SPoly SPoly::s() { return SPoly({GenPoly(), GenPoly(1)}); }

void SPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SPoly SPoly::operator+(const SPoly& o) const {
    std::vector<GenPoly> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < coeffs_.size()) out[k] += coeffs_[k];
        if (k < o.coeffs_.size()) out[k] += o.coeffs_[k];
    }
    return SPoly(std::move(out));
}

SPoly SPoly::operator-() const {
    std::vector<GenPoly> out;
    out.reserve(coeffs_.size());
    for (const GenPoly& c : coeffs_) out.push_back(-c);
    return SPoly(std::move(out));
}

SPoly SPoly::operator*(const SPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<GenPoly> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
            out[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    return SPoly(std::move(out));
}

SPoly SPoly::scaled(const GenPoly& c) const {
    std::vector<GenPoly> out;
    out.reserve(coeffs_.size());
    for (const GenPoly& x : coeffs_) out.push_back(x * c);
    return SPoly(std::move(out));
}

SPoly SPoly::pow(unsigned n) const {
    SPoly out(GenPoly(1));
    for (unsigned k = 0; k < n; ++k) out *= *this;
    return out;
}

SPoly SPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GenPoly> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k].scaled(GaussianRational(Rational(static_cast<long>(k))));
    }
    return SPoly(std::move(out));
}

GenPoly SPoly::eval(const GenPoly& point) const {
    GenPoly value;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * point + *it;
    return value;
}

GenPoly exponent_to_genpoly(const Exponent& e) {
    GenPoly out(GaussianRational(e.growth(), e.frequency().rational_part()));
    for (const auto& [name, coeff] : e.frequency().generator_coords()) {
        out += GenPoly::variable(name, GaussianRational(Rational(0), coeff));
    }
    return out;
}

void PartialFractionForm::add_residue(const Exponent& pole, unsigned order,
                                      const GaussianRational& residue) {
    if (order == 0) throw DomainError("partial-fraction order must be positive");
    if (residue.is_zero()) return;
    auto [it, inserted] = terms_.emplace(PoleKey{pole, order}, residue);
    if (!inserted) {
        it->second += residue;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PartialFractionForm PartialFractionForm::operator+(const PartialFractionForm& o) const {
    PartialFractionForm out = *this;
    for (const auto& [key, residue] : o.terms_) out.add_residue(key.pole, key.order, residue);
    return out;
}

namespace {

std::string pole_display(const Exponent& pole) {
    // Compact complex form for the denominator: "3", "i", "2*i", "(1+2*i)",
    // "(i*w1)".
    if (pole.is_zero()) return "0";
    if (auto g = pole.as_gaussian()) {
        const GaussianRational& v = *g;
        if (v.is_real() || v.re().is_zero()) return v.to_string();
        return "(" + v.to_string() + ")";
    }
    std::string inner;
    if (!pole.growth().is_zero()) inner += pole.growth().to_string();
    const auto& freq = pole.frequency();
    auto append = [&inner](const Rational& coeff, const std::string& symbol) {
        if (coeff.is_zero()) return;
        Rational m = coeff.abs();
        if (!inner.empty()) inner += coeff.is_negative() ? "-" : "+";
        else if (coeff.is_negative())
            inner += "-";
        if (!(m == Rational(1))) inner += m.to_string() + "*";
        inner += symbol;
    };
    append(freq.rational_part(), "i");
    for (const auto& [name, coeff] : freq.generator_coords()) append(coeff, "i*" + name);
    return "(" + inner + ")";
}

}  // namespace

std::string PartialFractionForm::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, residue] : terms_) {
        std::string res = residue.to_string();
        if (!residue.is_real() && !residue.re().is_zero()) res = "(" + res + ")";
        else if (!residue.is_real() && res.front() == '-')
            res = "(" + res + ")";
        std::string den;
        if (key.pole.is_zero()) {
            den = "s";
        } else {
            std::string p = pole_display(key.pole);
            den = p.front() == '-' ? "(s + " + p.substr(1) + ")" : "(s - " + p + ")";
        }
        if (key.order != 1) den += "^" + std::to_string(key.order);
        if (!out.empty()) out += " + ";
        out += res + "/" + den;
    }
    return out;
}

SPoly RationalFunction::denominator_expanded() const {
    SPoly out(GenPoly(1));
    for (const auto& [pole, mult] : denominator_factors) {
        out *= SPoly::linear_factor(pole).pow(mult);
    }
    return out;
}

unsigned RationalFunction::denominator_degree() const {
    unsigned total = 0;
    for (const auto& [pole, mult] : denominator_factors) total += mult;
    return total;
}

PartialFractionForm laplace(const BohlFunction& f) {
    PartialFractionForm out;
    for (const auto& [key, coeff] : f.term_map()) {
        out.add_residue(key.exponent, key.power + 1,
                        coeff * GaussianRational(Rational::factorial(key.power)));
    }
    return out;
}

BohlFunction inverse_laplace(const PartialFractionForm& pf) {
    BohlFunction out;
    for (const auto& [key, residue] : pf.terms()) {
        GaussianRational c = residue * GaussianRational(Rational::factorial(key.order - 1).inverse());
        out += BohlFunction::term(c, key.order - 1, key.pole);
    }
    return out;
}

RationalFunction pf_to_rational(const PartialFractionForm& pf) {
    RationalFunction out;
    for (const auto& [key, residue] : pf.terms()) {
        auto [it, inserted] = out.denominator_factors.emplace(key.pole, key.order);
        if (!inserted && it->second < key.order) it->second = key.order;
    }
    for (const auto& [key, residue] : pf.terms()) {
        // residue * (s-pole)^(max_order-order) * prod over other poles.
        SPoly contribution{GenPoly(GaussianRational(residue))};
        for (const auto& [pole, mult] : out.denominator_factors) {
            unsigned power = pole == key.pole ? mult - key.order : mult;
            if (power > 0) contribution *= SPoly::linear_factor(pole).pow(power);
        }
        out.numerator += contribution;
    }
    return out;
}

bool is_strictly_proper(const RationalFunction& rf) {
    return rf.numerator.degree() < static_cast<int>(rf.denominator_degree());
}

namespace {

// Synthetic division by (s - at): replaces coeffs by the quotient and returns
// the remainder, i.e. the value at `at`.
GenPoly synthetic_divide(std::vector<GenPoly>& coeffs, const GenPoly& at) {
    if (coeffs.empty()) return {};
    GenPoly acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        GenPoly next = coeffs[k] + at * acc;
        coeffs[k] = std::move(acc);
        acc = std::move(next);
    }
    coeffs.pop_back();
    // coeffs now holds the quotient in ascending order
    return acc;
}

// First `count` Taylor coefficients of the polynomial at the point `at`;
// the j-th entry is the j-th derivative divided by j!.
std::vector<GenPoly> taylor_at(std::vector<GenPoly> coeffs, const GenPoly& at, unsigned count) {
    std::vector<GenPoly> out(count);
    for (unsigned j = 0; j < count && !coeffs.empty(); ++j)
        out[j] = synthetic_divide(coeffs, at);
    return out;
}

}  // namespace

PartialFractionForm partial_fractions(const RationalFunction& rf) {
    if (!is_strictly_proper(rf))
        throw NotStrictlyProperError(
            "partial fractions need a strictly proper input (numerator degree " +
            std::to_string(rf.numerator.degree()) + ", denominator degree " +
            std::to_string(rf.denominator_degree()) + ")");

    PartialFractionForm out;
    SPoly full = rf.denominator_expanded();
    for (const auto& [pole, mult] : rf.denominator_factors) {
        // The residue of order mult-j at the pole is the j-th derivative of
        // (s - pole)^mult * rf(s) = N(s)/d(s) at the pole, divided by j!.
        // Those are the Taylor coefficients c_j of N/d there; with
        // c_j = p_j / d(pole)^(j+1) the series division stays polynomial:
        //   p_j = N_j d0^j - sum_{l=1..j} d_l p_{j-l} d0^(l-1).
        GenPoly at = exponent_to_genpoly(pole);
        std::vector<GenPoly> d_coeffs = full.coeffs();
        for (unsigned k = 0; k < mult; ++k) synthetic_divide(d_coeffs, at);

        std::vector<GenPoly> n_tay = taylor_at(rf.numerator.coeffs(), at, mult);
        std::vector<GenPoly> d_tay = taylor_at(std::move(d_coeffs), at, mult);

        std::vector<GenPoly> d0_pow(mult + 1);
        d0_pow[0] = GenPoly(1);
        for (unsigned k = 1; k <= mult; ++k) d0_pow[k] = d0_pow[k - 1] * d_tay[0];

        std::vector<GenPoly> p(mult);
        for (unsigned j = 0; j < mult; ++j) {
            p[j] = n_tay[j] * d0_pow[j];
            for (unsigned l = 1; l <= j; ++l) p[j] -= d_tay[l] * p[j - l] * d0_pow[l - 1];
            auto residue = GenPoly::constant_ratio(p[j], d0_pow[j + 1]);
            if (!residue)
                throw UnrepresentableError(
                    "residue at pole " + pole.to_string() +
                    " is not a Gaussian rational; it involves the frequency generators");
            out.add_residue(pole, mult - j, *residue);
        }
    }
    return out;
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator * b.denominator_expanded() == b.numerator * a.denominator_expanded();
}

}  // namespace bohl
