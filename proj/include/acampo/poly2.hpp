#pragma once

#include <map>
#include <string>
#include <utility>

#include "acampo/bigint.hpp"
#include "acampo/series.hpp"

namespace acampo {

// Bivariate polynomial with integer coefficients in the variables x, y.
class Poly2 {
public:
    using Key = std::pair<unsigned, unsigned>;  // (deg_x, deg_y)

    Poly2() = default;

    void add_term(unsigned dx, unsigned dy, const BigInt& c);
    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;

    TruncatedSeries eval(const TruncatedSeries& x, const TruncatedSeries& y) const;

    std::string to_string() const;

    // Accepts +, -, *, ^, integer literals, x, y and parentheses.
    // '^' only after x, y or a parenthesized factor, with a nonnegative integer exponent.
    static Poly2 parse(const std::string& text);

private:
    std::map<Key, BigInt> terms_;
};

}  // namespace acampo
