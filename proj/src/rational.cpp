#include "tcurve/rational.hpp"

#include <stdexcept>

namespace tcurve {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Rat::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = BigInt::divmod(num_, g).first;
        den_ = BigInt::divmod(den_, g).first;
    }
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt::from_string(s), BigInt(1));
    return Rat(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
Rat Rat::operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

int Rat::compare(const Rat& o) const { return (num_ * o.den_).compare(o.num_ * den_); }

BigInt Rat::floor() const {
    auto [q, r] = BigInt::divmod(num_, den_);
    if (r.is_negative()) q = q - BigInt(1);
    return q;
}

std::string Rat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace tcurve
