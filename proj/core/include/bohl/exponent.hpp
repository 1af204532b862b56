#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "bohl/gaussian.hpp"
#include "bohl/rational.hpp"

namespace bohl {

/// A frequency in the Q-module spanned by the unit frequency and a set of
/// named formal generators. Distinct generators are Q-linearly independent by
/// construction, so equality of frequencies is decidable coordinatewise.
class FreqVector {
public:
    FreqVector() = default;
    explicit FreqVector(Rational rational_part) : rational_(std::move(rational_part)) {}
    FreqVector(Rational rational_part, std::map<std::string, Rational> generator_coords);

    static FreqVector generator(const std::string& name, Rational coeff = Rational(1));

    const Rational& rational_part() const { return rational_; }
    const std::map<std::string, Rational>& generator_coords() const { return gens_; }

    bool is_zero() const { return rational_.is_zero() && gens_.empty(); }
    bool has_generators() const { return !gens_.empty(); }

    FreqVector operator+(const FreqVector& o) const;
    FreqVector operator-(const FreqVector& o) const { return *this + (-o); }
    FreqVector operator-() const;
    FreqVector scaled(const Rational& c) const;

    bool operator==(const FreqVector& o) const {
        return rational_ == o.rational_ && gens_ == o.gens_;
    }
    std::strong_ordering operator<=>(const FreqVector& o) const;

private:
    Rational rational_;                     // coordinate of the unit frequency
    std::map<std::string, Rational> gens_;  // name -> nonzero coordinate
};

/// An exponent lambda = growth + i*frequency with rational growth.
class Exponent {
public:
    Exponent() = default;
    Exponent(Rational growth, FreqVector frequency)
        : growth_(std::move(growth)), freq_(std::move(frequency)) {}
    explicit Exponent(Rational growth) : growth_(std::move(growth)) {}

    static Exponent real(Rational growth) { return Exponent(std::move(growth)); }
    static Exponent imaginary(FreqVector frequency) {
        return Exponent(Rational(0), std::move(frequency));
    }

    const Rational& growth() const { return growth_; }
    const FreqVector& frequency() const { return freq_; }

    bool is_zero() const { return growth_.is_zero() && freq_.is_zero(); }

    Exponent operator+(const Exponent& o) const { return {growth_ + o.growth_, freq_ + o.freq_}; }
    Exponent operator-(const Exponent& o) const { return {growth_ - o.growth_, freq_ - o.freq_}; }
    Exponent operator-() const { return {-growth_, -freq_}; }
    Exponent scaled(const Rational& c) const { return {growth_ * c, freq_.scaled(c)}; }

    bool operator==(const Exponent& o) const {
        return growth_ == o.growth_ && freq_ == o.freq_;
    }
    /// Total order: growth, then rational frequency part, then generator
    /// coordinates by sorted generator name.
    std::strong_ordering operator<=>(const Exponent& o) const {
        if (auto c = growth_ <=> o.growth_; c != 0) return c;
        return freq_ <=> o.freq_;
    }

    /// The exponent's value as a Gaussian rational, when its frequency has no
    /// generator component.
    std::optional<GaussianRational> as_gaussian() const {
        if (freq_.has_generators()) return std::nullopt;
        return GaussianRational(growth_, freq_.rational_part());
    }

    void collect_generators(std::set<std::string>& out) const {
        for (const auto& [name, coeff] : freq_.generator_coords()) out.insert(name);
    }

    /// Display form, e.g. "0", "1/2", "(2)i", "(1/2 + (3*w1 + 1)i)".
    std::string to_string() const;

private:
    Rational growth_;
    FreqVector freq_;
};

}  // namespace bohl
