#include "bohl/genpoly.hpp"

#include "bohl/errors.hpp"

namespace bohl {

GenPoly::GenPoly(GaussianRational constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

GenPoly GenPoly::variable(const std::string& name, GaussianRational coeff) {
    GenPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(Monomial{{name, 1}}, std::move(coeff));
    return p;
}

GaussianRational GenPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational();
    if (terms_.size() != 1 || !terms_.begin()->first.empty())
        throw DomainError("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

void GenPoly::add_term(const Monomial& m, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GenPoly GenPoly::operator+(const GenPoly& o) const {
    GenPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

GenPoly GenPoly::operator-() const {
    GenPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

GenPoly GenPoly::operator*(const GenPoly& o) const {
    GenPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [name, pw] : mb) {
                auto [it, inserted] = m.emplace(name, pw);
                if (!inserted) it->second += pw;
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

GenPoly GenPoly::scaled(const GaussianRational& c) const {
    GenPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

GenPoly GenPoly::pow(unsigned n) const {
    GenPoly out(GaussianRational(Rational(1)));
    for (unsigned k = 0; k < n; ++k) out = out * *this;
    return out;
}

std::optional<GaussianRational> GenPoly::constant_ratio(const GenPoly& a, const GenPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return GaussianRational();
    // a == r*b forces identical monomial support.
    const auto& [m0, c0] = *b.terms_.begin();
    auto it = a.terms_.find(m0);
    if (it == a.terms_.end()) return std::nullopt;
    GaussianRational r = it->second / c0;
    if (a == b.scaled(r)) return r;
    return std::nullopt;
}

std::string GenPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (const auto& [name, pw] : m) {
            out += "*" + name;
            if (pw != 1) out += "^" + std::to_string(pw);
        }
    }
    return out;
}

}  // namespace bohl
