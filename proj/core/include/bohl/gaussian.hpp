#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "bohl/rational.hpp"

namespace bohl {

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = Rational())
        : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}  // NOLINT: implicit for integer literals

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational conjugate() const { return {re_, -im_}; }

    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero Gaussian rational");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    std::strong_ordering operator<=>(const GaussianRational& o) const {
        if (auto c = re_ <=> o.re_; c != 0) return c;
        return im_ <=> o.im_;
    }

    double abs_double() const {
        return std::hypot(re_.to_double(), im_.to_double());
    }

    /// "3", "-1/2", "i", "2*i", "1+2*i", "-1-1/2*i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

inline std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out += re_.to_string();
    if (!im_.is_zero()) {
        if (!out.empty()) out += im_.is_negative() ? "-" : "+";
        Rational m = out.empty() ? im_ : im_.abs();
        if (m == Rational(1))
            out += "i";
        else if (m == Rational(-1))
            out += "-i";
        else
            out += m.to_string() + "*i";
    }
    return out;
}

}  // namespace bohl
