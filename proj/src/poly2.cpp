#include "acampo/poly2.hpp"

#include <cctype>

#include "acampo/errors.hpp"

namespace acampo {

void Poly2::add_term(unsigned dx, unsigned dy, const BigInt& c) {
    if (c.is_zero()) return;
    Key k{dx, dy};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add_term(a.first + b.first, a.second + b.second, ca * cb);
    return r;
}

TruncatedSeries Poly2::eval(const TruncatedSeries& x, const TruncatedSeries& y) const {
    TruncatedSeries acc;
    // cache powers to keep truncation bounds as tight as repeated squaring allows
    std::map<unsigned, TruncatedSeries> xp, yp;
    auto power = [](std::map<unsigned, TruncatedSeries>& cache, const TruncatedSeries& base,
                    unsigned e) -> const TruncatedSeries& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        TruncatedSeries v = base.pow(e);
        return cache.emplace(e, std::move(v)).first->second;
    };
    for (const auto& [k, c] : terms_) {
        TruncatedSeries term = power(xp, x, k.first) * power(yp, y, k.second);
        acc = acc + term.scaled(Rational(c, BigInt(1)));
    }
    return acc;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        BigInt a = c.abs();
        if (!(a == BigInt(1)) || (k.first == 0 && k.second == 0)) mono += a.to_string();
        auto app = [&](const char* v, unsigned d) {
            if (d == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (d > 1) mono += "^" + std::to_string(d);
        };
        app("x", k.first);
        app("y", k.second);
        if (out.empty()) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += mono;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::ParseError,
                    "polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        unsigned long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long long>(s[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    BigInt parse_literal() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer literal");
        return BigInt::from_string(s.substr(start, pos - start));
    }

    Poly2 parse_expr() {
        Poly2 acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly2 t = parse_term();
        acc = neg ? (Poly2() - t) : t;
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos; acc = acc + parse_term(); }
            else if (c == '-') { ++pos; acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    Poly2 parse_term() {
        Poly2 acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') { ++pos; acc = acc * parse_factor(); }
            else if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                // juxtaposition, e.g. "2x" or "x y"
                acc = acc * parse_factor();
            } else break;
        }
        return acc;
    }

    Poly2 parse_factor() {
        Poly2 base;
        char c = peek();
        if (c == '(') {
            ++pos;
            base = parse_expr();
            if (!eat(')')) fail("expected ')'");
        } else if (c == 'x' || c == 'y') {
            ++pos;
            base.add_term(c == 'x' ? 1 : 0, c == 'y' ? 1 : 0, BigInt(1));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base.add_term(0, 0, parse_literal());
        } else {
            fail("expected factor");
        }
        if (eat('^')) {
            unsigned e = parse_uint();
            Poly2 r;
            r.add_term(0, 0, BigInt(1));
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
};

}  // namespace

Poly2 Poly2::parse(const std::string& text) {
    Parser p(text);
    Poly2 r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace acampo
