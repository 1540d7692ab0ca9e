#include "supersat/bigint.hpp"

#include <algorithm>

#include "supersat/error.hpp"

namespace supersat {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1;
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += int64_t{1} << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
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
        int c = compare_mag(mag_, o.mag_);
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
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] +
                           static_cast<uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error("BigInt: division by zero");
    if (compare_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // Bitwise long division on magnitudes.
    size_t bits = a.mag_.size() * 32;
    std::vector<uint32_t> quot(a.mag_.size(), 0), rem;
    for (size_t i = bits; i-- > 0;) {
        // rem = rem << 1 | bit_i(a)
        uint32_t carry = (a.mag_[i / 32] >> (i % 32)) & 1;
        for (size_t w = 0; w < rem.size(); ++w) {
            uint32_t next = rem[w] >> 31;
            rem[w] = (rem[w] << 1) | carry;
            carry = next;
        }
        if (carry) rem.push_back(carry);
        if (compare_mag(rem, b.mag_) >= 0) {
            rem = sub_mag(rem, b.mag_);
            quot[i / 32] |= uint32_t{1} << (i % 32);
        }
    }
    q.mag_ = std::move(quot);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r.mag_ = std::move(rem);
    r.sign_ = a.sign_;
    r.trim();
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

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = compare_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, out = 1;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::factorial(unsigned k) {
    BigInt out = 1;
    for (unsigned i = 2; i <= k; ++i) out *= BigInt(static_cast<long long>(i));
    return out;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw Error("BigInt: empty string");
    size_t i = 0;
    int sgn = 1;
    if (s[0] == '-') {
        sgn = -1;
        i = 1;
    } else if (s[0] == '+') {
        i = 1;
    }
    if (i == s.size()) throw Error("BigInt: no digits");
    BigInt out;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error("BigInt: bad digit");
        out = out * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sgn < 0) out = -out;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt v = abs();
    std::string out;
    BigInt ten9(1000000000);
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, ten9, q, r);
        long long chunk = r.is_zero() ? 0 : r.to_int64();
        std::string part = std::to_string(chunk);
        if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
        out = part + out;
        v = std::move(q);
    }
    return (sign_ < 0 ? "-" : "") + out;
}

double BigInt::to_double() const {
    double out = 0;
    for (size_t i = mag_.size(); i-- > 0;) out = out * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -out : out;
}

long long BigInt::to_int64() const {
    if (mag_.size() > 2) throw Error("BigInt: does not fit in int64");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) {
        if (u > 0x7fffffffffffffffULL) throw Error("BigInt: does not fit in int64");
        return static_cast<long long>(u);
    }
    if (u > 0x8000000000000000ULL) throw Error("BigInt: does not fit in int64");
    return -static_cast<long long>(u - 1) - 1;
}

}  // namespace supersat
