#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tcurve {

// Arbitrary-precision signed integer, base 2^32 little-endian magnitude.
// Sized for this project's workloads: simplex tableaux entries and dyadic
// polynomial evaluation (a few thousand bits at most).
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(const std::string& decimal);
    static BigInt pow2(std::uint64_t e);        // 2^e

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

    BigInt shl(std::uint64_t bits) const;
    BigInt shr(std::uint64_t bits) const;

    // Quotient truncated toward zero, remainder has dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, std::uint64_t e);

    int compare(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    std::size_t bit_length() const;
    bool bit(std::uint64_t i) const;
    bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }

    // Exact when the value fits; callers assert the range.
    std::int64_t to_int64() const;
    bool fits_int64() const;
    double to_double() const;

    std::string to_string() const;

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // trimmed, little-endian

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace tcurve
