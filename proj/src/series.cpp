#include "acampo/series.hpp"

namespace acampo {

TruncatedSeries TruncatedSeries::monomial(const Rational& coeff, const Rational& exponent) {
    TruncatedSeries s;
    s.add_term(exponent, coeff);
    return s;
}

void TruncatedSeries::set_truncation(const Rational& t) {
    truncation_ = t;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first >= t) it = terms_.erase(it);
        else ++it;
    }
}

void TruncatedSeries::add_term(const Rational& exponent, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (truncation_ && exponent >= *truncation_) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Rational> TruncatedSeries::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Rational TruncatedSeries::order_lower_bound() const {
    if (auto o = order()) return *o;
    if (truncation_) return *truncation_;
    // exact zero: order is infinite; any bound works, pick something large
    return Rational(0);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r;
    if (truncation_ && o.truncation_)
        r.truncation_ = *truncation_ < *o.truncation_ ? *truncation_ : *o.truncation_;
    else if (truncation_)
        r.truncation_ = truncation_;
    else if (o.truncation_)
        r.truncation_ = o.truncation_;
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    // an exact zero factor kills the product exactly
    if ((is_exact() && no_visible_term()) || (o.is_exact() && o.no_visible_term()))
        return TruncatedSeries();
    TruncatedSeries r;
    // valid exponents: < min(T_a + ord(b), T_b + ord(a)) over the finite truncations
    std::optional<Rational> bound;
    if (truncation_) bound = *truncation_ + o.order_lower_bound();
    if (o.truncation_) {
        Rational b2 = *o.truncation_ + order_lower_bound();
        if (!bound || b2 < *bound) bound = b2;
    }
    r.truncation_ = bound;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    if (c.is_zero()) return TruncatedSeries();
    TruncatedSeries r;
    r.truncation_ = truncation_;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned long long e) const {
    TruncatedSeries r = TruncatedSeries::constant(Rational(1));
    for (unsigned long long i = 0; i < e; ++i) r = r * (*this);
    return r;
}

}  // namespace acampo
