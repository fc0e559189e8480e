#pragma once

#include <string>

#include "tcurve/bigint.hpp"

namespace tcurve {

// Exact rational, always normalized: den > 0, gcd(num, den) = 1, zero is 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t v) : num_(v), den_(1) {}
    Rat(BigInt num, BigInt den);
    Rat(std::int64_t num, std::int64_t den) : Rat(BigInt(num), BigInt(den)) {}

    static Rat from_string(const std::string& s);  // "p/q" or "p"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    int compare(const Rat& o) const;
    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return compare(o) < 0; }
    bool operator<=(const Rat& o) const { return compare(o) <= 0; }
    bool operator>(const Rat& o) const { return compare(o) > 0; }
    bool operator>=(const Rat& o) const { return compare(o) >= 0; }

    BigInt floor() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace tcurve
