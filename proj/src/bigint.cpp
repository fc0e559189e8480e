#include "tcurve/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace tcurve {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow on INT64_MIN.
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1u : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> r;
    r.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
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
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    return r;
}

BigInt BigInt::shl(std::uint64_t bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    std::uint64_t words = bits / 32, rem = bits % 32;
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(words, 0);
    if (rem == 0) {
        r.mag_.insert(r.mag_.end(), mag_.begin(), mag_.end());
    } else {
        std::uint32_t carry = 0;
        for (std::uint32_t w : mag_) {
            r.mag_.push_back((w << rem) | carry);
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) >> (32 - rem));
        }
        if (carry) r.mag_.push_back(carry);
    }
    return r;
}

BigInt BigInt::shr(std::uint64_t bits) const {
    if (sign_ == 0) return *this;
    std::uint64_t words = bits / 32, rem = bits % 32;
    if (words >= mag_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.begin() + static_cast<std::ptrdiff_t>(words), mag_.end());
    if (rem) {
        for (std::size_t i = 0; i < r.mag_.size(); ++i) {
            std::uint32_t hi = (i + 1 < r.mag_.size())
                ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(r.mag_[i + 1]) << (32 - rem))
                : 0u;
            r.mag_[i] = (r.mag_[i] >> rem) | hi;
        }
    }
    r.trim();
    return r;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t n = (mag_.size() - 1) * 32;
    while (top) {
        ++n;
        top >>= 1;
    }
    return n;
}

bool BigInt::bit(std::uint64_t i) const {
    std::uint64_t w = i / 32;
    if (w >= mag_.size()) return false;
    return (mag_[w] >> (i % 32)) & 1u;
}

// Shift-and-subtract long division on magnitudes.
std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigInt am = a.abs(), bm = b.abs();
    if (cmp_mag(am.mag_, bm.mag_) < 0) return {BigInt(), a};
    std::size_t shift = am.bit_length() - bm.bit_length();
    BigInt cur = bm.shl(shift);
    BigInt q, r = am;
    std::vector<bool> qbits(shift + 1, false);
    for (std::size_t i = shift + 1; i-- > 0;) {
        if (r.compare(cur) >= 0) {
            r = r - cur;
            qbits[i] = true;
        }
        cur = cur.shr(1);
    }
    for (std::size_t i = qbits.size(); i-- > 0;) {
        if (qbits[i]) {
            BigInt one(1);
            q = q + one.shl(i);
        }
    }
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {q, r};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint64_t shift = 0;
    while (!a.is_odd() && !b.is_odd()) {
        a = a.shr(1);
        b = b.shr(1);
        ++shift;
    }
    while (!a.is_odd()) a = a.shr(1);
    while (!b.is_zero()) {
        while (!b.is_odd()) b = b.shr(1);
        if (a.compare(b) > 0) std::swap(a, b);
        b = b - a;
    }
    return a.shl(shift);
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

BigInt BigInt::pow2(std::uint64_t e) { return BigInt(1).shl(e); }

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) return u <= static_cast<std::uint64_t>(INT64_MAX);
    return u <= static_cast<std::uint64_t>(INT64_MAX) + 1u;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ >= 0 ? static_cast<std::int64_t>(u) : -static_cast<std::int64_t>(u - 1) - 1;
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    double v = 0.0;
    std::size_t n = mag_.size();
    std::size_t lo = n > 3 ? n - 3 : 0;
    for (std::size_t i = n; i-- > lo;) v = v * 4294967296.0 + mag_[i];
    v = std::ldexp(v, static_cast<int>(lo * 32));
    return sign_ < 0 ? -v : v;
}

BigInt BigInt::from_string(const std::string& decimal) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i >= decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(c - '0');
    }
    if (neg) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

}  // namespace tcurve
