#include "acampo/bigint.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace acampo {

namespace {
const uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) { sign_ = 0; return; }
    sign_ = v > 0 ? 1 : -1;
    // avoid UB on LLONG_MIN
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ull;
    while (m) { mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu)); m >>= 32; }
}

BigInt BigInt::from_string(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { sg = s[i] == '-' ? -1 : 1; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sg < 0) r = -r;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += static_cast<int64_t>(kBase); borrow = 1; } else borrow = 0;
        r.push_back(static_cast<uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.sign_ = sign_; r.mag_ = sub_mag(mag_, o.mag_); }
        else       { r.sign_ = o.sign_; r.mag_ = sub_mag(o.mag_, mag_); }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ == 0 || c < 0) { q = BigInt(); r = a; return; }

    // binary long division on magnitudes
    size_t abits = a.mag_.size() * 32;
    std::vector<uint32_t> rem;
    std::vector<uint32_t> quo(a.mag_.size(), 0);
    for (size_t bit = abits; bit-- > 0;) {
        // rem = rem*2 + bit(a, bit)
        uint32_t carry = 0;
        for (size_t i = 0; i < rem.size(); ++i) {
            uint32_t nv = (rem[i] << 1) | carry;
            carry = rem[i] >> 31;
            rem[i] = nv;
        }
        if (carry) rem.push_back(carry);
        uint32_t abit = (a.mag_[bit / 32] >> (bit % 32)) & 1u;
        if (abit) {
            if (rem.empty()) rem.push_back(1);
            else {
                size_t i = 0;
                uint64_t add = 1;
                while (add && i < rem.size()) {
                    uint64_t s = rem[i] + add;
                    rem[i] = static_cast<uint32_t>(s & 0xffffffffu);
                    add = s >> 32;
                    ++i;
                }
                if (add) rem.push_back(static_cast<uint32_t>(add));
            }
        }
        if (cmp_mag(rem, b.mag_) >= 0) {
            rem = sub_mag(rem, b.mag_);
            quo[bit / 32] |= (1u << (bit % 32));
        }
    }
    q.mag_ = std::move(quo);
    q.sign_ = 1;
    q.trim();
    r.mag_ = std::move(rem);
    r.sign_ = 1;
    r.trim();
    if (q.sign_ != 0) q.sign_ = a.sign_ * b.sign_;
    if (r.sign_ != 0) r.sign_ = a.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

bool BigInt::fits_int64() const {
    static const BigInt lo(std::numeric_limits<long long>::min());
    static const BigInt hi(std::numeric_limits<long long>::max());
    return *this >= lo && *this <= hi;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (sign_ < 0) return -static_cast<long long>(m);
    return static_cast<long long>(m);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> m = mag_;
    while (!m.empty()) {
        // divide magnitude by 10^9, collect remainder
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace acampo
