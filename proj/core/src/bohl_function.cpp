#include "bohl/bohl_function.hpp"

#include <algorithm>

#include "bohl/errors.hpp"

namespace bohl {

BohlFunction BohlFunction::constant(GaussianRational c) {
    return term(std::move(c), 0, Exponent());
}

BohlFunction BohlFunction::term(GaussianRational c, unsigned power, Exponent exponent) {
    BohlFunction f;
    if (!c.is_zero()) f.terms_.emplace(TermKey{std::move(exponent), power}, std::move(c));
    return f;
}

BohlFunction BohlFunction::normalize(const std::vector<Term>& terms) {
    BohlFunction f;
    for (const Term& t : terms) f.add_term(TermKey{t.exponent, t.power}, t.coeff);
    return f;
}

std::vector<Term> BohlFunction::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) out.push_back({coeff, key.power, key.exponent});
    return out;
}

void BohlFunction::add_term(const TermKey& key, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BohlFunction BohlFunction::operator+(const BohlFunction& o) const {
    BohlFunction out = *this;
    for (const auto& [key, coeff] : o.terms_) out.add_term(key, coeff);
    return out;
}

BohlFunction BohlFunction::operator-() const {
    BohlFunction out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
    return out;
}

BohlFunction BohlFunction::operator*(const BohlFunction& o) const {
    BohlFunction out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            out.add_term(TermKey{ka.exponent + kb.exponent, ka.power + kb.power}, ca * cb);
        }
    }
    return out;
}

BohlFunction BohlFunction::scaled(const GaussianRational& c) const {
    BohlFunction out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
}

BohlFunction BohlFunction::pow(unsigned n) const {
    BohlFunction out = one();
    for (unsigned k = 0; k < n; ++k) out *= *this;
    return out;
}

BohlFunction BohlFunction::differentiate() const {
    BohlFunction out;
    for (const auto& [key, coeff] : terms_) {
        if (key.power >= 1) {
            out.add_term(TermKey{key.exponent, key.power - 1},
                         coeff * GaussianRational(Rational(static_cast<long>(key.power))));
        }
        if (!key.exponent.is_zero()) {
            auto lambda = key.exponent.as_gaussian();
            if (!lambda)
                throw UnrepresentableError(
                    "derivative coefficient is not a Gaussian rational: exponent " +
                    key.exponent.to_string() + " has formal frequency generators");
            out.add_term(key, coeff * *lambda);
        }
    }
    return out;
}

BohlFunction BohlFunction::apply_annihilator(const Exponent& lambda, unsigned m) const {
    BohlFunction f = *this;
    for (unsigned step = 0; step < m; ++step) {
        BohlFunction next;
        for (const auto& [key, coeff] : f.terms_) {
            if (key.power >= 1) {
                next.add_term(TermKey{key.exponent, key.power - 1},
                              coeff * GaussianRational(Rational(static_cast<long>(key.power))));
            }
            Exponent diff = key.exponent - lambda;
            if (!diff.is_zero()) {
                auto value = diff.as_gaussian();
                if (!value)
                    throw UnrepresentableError(
                        "annihilator factor is not a Gaussian rational: exponent difference " +
                        diff.to_string() + " has formal frequency generators");
                next.add_term(key, coeff * *value);
            }
        }
        f = std::move(next);
    }
    return f;
}

BohlFunction BohlFunction::psi() const {
    BohlFunction out;
    for (const auto& [key, coeff] : terms_) {
        out.add_term(TermKey{Exponent::imaginary(key.exponent.frequency()), 0}, coeff);
    }
    return out;
}

bool BohlFunction::is_ap_form() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& entry) {
        return entry.first.power == 0 && entry.first.exponent.growth().is_zero();
    });
}

bool BohlFunction::is_unit() const {
    return terms_.size() == 1 && terms_.begin()->first.power == 0;
}

BohlFunction BohlFunction::unit_inverse() const {
    if (!is_unit()) throw NotAUnitError();
    const auto& [key, coeff] = *terms_.begin();
    return term(coeff.inverse(), 0, -key.exponent);
}

GaussianRational BohlFunction::eval_at_zero() const {
    GaussianRational sum;
    for (const auto& [key, coeff] : terms_) {
        if (key.power == 0) sum += coeff;
    }
    return sum;
}

std::set<std::string> BohlFunction::generators() const {
    std::set<std::string> out;
    for (const auto& [key, coeff] : terms_) key.exponent.collect_generators(out);
    return out;
}

BohlFunction from_polynomial_substitution(const GenPoly& p, const std::vector<std::string>& vars,
                                          const std::vector<Exponent>& exponents) {
    if (vars.empty() || exponents.size() + 1 != vars.size())
        throw ArityError("substitution needs one exponent per variable after the first (got " +
                         std::to_string(exponents.size()) + " exponents for " +
                         std::to_string(vars.size()) + " variables)");
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!index.emplace(vars[k], k).second)
            throw ArityError("duplicate substitution variable '" + vars[k] + "'");
    }

    BohlFunction out;
    for (const auto& [monomial, coeff] : p.terms()) {
        unsigned power = 0;
        Exponent exponent;
        for (const auto& [name, pw] : monomial) {
            auto it = index.find(name);
            if (it == index.end())
                throw ArityError("polynomial symbol '" + name +
                                 "' is not a substitution variable");
            if (pw < 0)
                throw DomainError("negative power of substitution variable '" + name + "'");
            if (it->second == 0) {
                power += static_cast<unsigned>(pw);
            } else {
                exponent = exponent + exponents[it->second - 1].scaled(Rational(pw));
            }
        }
        out += BohlFunction::term(coeff, power, exponent);
    }
    return out;
}

}  // namespace bohl
