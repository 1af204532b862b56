#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "bohl/errors.hpp"

namespace bohl {

/// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit, mirrors integer literals
    Rational(long n, long d) : v_(make_canonical(mpz_class(n), mpz_class(d))) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(make_canonical(n, d)) {}
    explicit Rational(const mpq_class& q) : v_(q) {
        if (v_.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
        v_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q" (base 10). Throws JsonError on malformed text.
    static Rational from_string(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational operator+(const Rational& o) const {
        return Rational(mpq_class(v_ + o.v_), already_canonical{});
    }
    Rational operator-(const Rational& o) const {
        return Rational(mpq_class(v_ - o.v_), already_canonical{});
    }
    Rational operator*(const Rational& o) const {
        return Rational(mpq_class(v_ * o.v_), already_canonical{});
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(v_ / o.v_), already_canonical{});
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return Rational(mpq_class(1 / v_), already_canonical{});
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// k! as a rational (k small).
    static Rational factorial(unsigned k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        return Rational(f, 1);
    }

    double to_double() const { return v_.get_d(); }

    /// "p" when integral, else "p/q".
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}

    static mpq_class make_canonical(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZeroError("rational with zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }

    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw JsonError("empty rational literal");
    mpq_class q;
    try {
        q = mpq_class(std::string(text), 10);
    } catch (const std::invalid_argument&) {
        throw JsonError("malformed rational literal '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw JsonError("rational literal with zero denominator");
    q.canonicalize();
    return Rational(q);
}

}  // namespace bohl
