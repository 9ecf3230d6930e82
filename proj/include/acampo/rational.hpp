#pragma once

#include <stdexcept>
#include <string>

#include "acampo/bigint.hpp"

namespace acampo {

// Exact rational, always normalized: gcd(num, den) = 1, den > 0.
struct Rational {
    BigInt num;
    BigInt den;

    Rational() : num(0), den(1) {}
    Rational(long long n) : num(n), den(1) {}
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den.is_negative()) { num = -num; den = -den; }
        BigInt g = BigInt::gcd(num, den);
        if (!g.is_zero() && !(g == BigInt(1))) { num = num / g; den = den / g; }
        if (num.is_zero()) den = BigInt(1);
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_integer() const { return den == BigInt(1); }
    int sign() const { return num.sign(); }

    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const { return Rational(num * o.den, den * o.num); }
    Rational operator-() const { Rational r = *this; r.num = -r.num; return r; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string to_string() const {
        return is_integer() ? num.to_string() : num.to_string() + "/" + den.to_string();
    }
};

}  // namespace acampo
