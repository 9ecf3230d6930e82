#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace acampo {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Only what the lattice algorithms need: ring ops, truncated divmod, gcd,
// decimal I/O. Values are immutable in spirit; all ops return new values.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend and |r| < |d|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned long long exp);

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if out of range

    std::string to_string() const;

private:
    int sign_;                      // -1, 0, +1
    std::vector<uint32_t> mag_;     // little-endian, no trailing zeros, empty iff sign_==0

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace acampo
