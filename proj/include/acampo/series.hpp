#pragma once

#include <map>
#include <optional>

#include "acampo/rational.hpp"

namespace acampo {

// Power series in one variable t with exact rational coefficients and
// nonnegative rational exponents. A series either is exact (no truncation,
// e.g. a polynomial parametrization) or carries a finite `truncation`: the
// first exponent about which it holds no information. Arithmetic tracks how
// far results stay reliable.
class TruncatedSeries {
public:
    // exact zero
    TruncatedSeries() = default;
    // zero known only below `truncation`
    explicit TruncatedSeries(Rational truncation) : truncation_(std::move(truncation)) {}

    static TruncatedSeries monomial(const Rational& coeff, const Rational& exponent);
    static TruncatedSeries constant(const Rational& c) { return monomial(c, Rational(0)); }

    void set_truncation(const Rational& t);
    void add_term(const Rational& exponent, const Rational& coeff);

    const std::map<Rational, Rational>& terms() const { return terms_; }
    bool is_exact() const { return !truncation_.has_value(); }
    const std::optional<Rational>& truncation() const { return truncation_; }

    // no visible term (true zero when exact, zero-up-to-truncation otherwise)
    bool no_visible_term() const { return terms_.empty(); }
    // smallest exponent with nonzero coefficient; nullopt when none visible
    std::optional<Rational> order() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;
    TruncatedSeries pow(unsigned long long e) const;

private:
    std::map<Rational, Rational> terms_;
    std::optional<Rational> truncation_;

    // lower bound for the order, used to propagate truncations through products
    Rational order_lower_bound() const;
};

}  // namespace acampo
