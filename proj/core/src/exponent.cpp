#include "bohl/exponent.hpp"

namespace bohl {

FreqVector::FreqVector(Rational rational_part, std::map<std::string, Rational> generator_coords)
    : rational_(std::move(rational_part)), gens_(std::move(generator_coords)) {
    for (auto it = gens_.begin(); it != gens_.end();) {
        if (it->second.is_zero())
            it = gens_.erase(it);
        else
            ++it;
    }
}

FreqVector FreqVector::generator(const std::string& name, Rational coeff) {
    FreqVector v;
    if (!coeff.is_zero()) v.gens_.emplace(name, std::move(coeff));
    return v;
}

FreqVector FreqVector::operator+(const FreqVector& o) const {
    FreqVector out;
    out.rational_ = rational_ + o.rational_;
    out.gens_ = gens_;
    for (const auto& [name, coeff] : o.gens_) {
        auto [it, inserted] = out.gens_.emplace(name, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.gens_.erase(it);
        }
    }
    return out;
}

FreqVector FreqVector::operator-() const {
    FreqVector out;
    out.rational_ = -rational_;
    for (const auto& [name, coeff] : gens_) out.gens_.emplace(name, -coeff);
    return out;
}

FreqVector FreqVector::scaled(const Rational& c) const {
    FreqVector out;
    if (c.is_zero()) return out;
    out.rational_ = rational_ * c;
    for (const auto& [name, coeff] : gens_) out.gens_.emplace(name, coeff * c);
    return out;
}

std::strong_ordering FreqVector::operator<=>(const FreqVector& o) const {
    if (auto c = rational_ <=> o.rational_; c != 0) return c;
    // Lexicographic over (name, coordinate) pairs in sorted-name order.
    auto a = gens_.begin();
    auto b = o.gens_.begin();
    for (; a != gens_.end() && b != o.gens_.end(); ++a, ++b) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        if (auto c = a->second <=> b->second; c != 0) return c;
    }
    if (a != gens_.end()) return std::strong_ordering::greater;
    if (b != o.gens_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string Exponent::to_string() const {
    if (is_zero()) return "0";
    if (freq_.is_zero()) return growth_.to_string();

    std::string imag;
    bool first = true;
    for (const auto& [name, coeff] : freq_.generator_coords()) {
        Rational m = first ? coeff : coeff.abs();
        if (!first) imag += coeff.is_negative() ? " - " : " + ";
        if (m == Rational(1))
            imag += name;
        else if (m == Rational(-1))
            imag += "-" + name;
        else
            imag += m.to_string() + "*" + name;
        first = false;
    }
    const Rational& r = freq_.rational_part();
    if (!r.is_zero()) {
        if (!first) {
            imag += r.is_negative() ? " - " + r.abs().to_string() : " + " + r.to_string();
        } else {
            imag = r.to_string();
        }
    }

    std::string imag_part = "(" + imag + ")i";
    if (growth_.is_zero()) return imag_part;
    return "(" + growth_.to_string() + " + " + imag_part + ")";
}

}  // namespace bohl
