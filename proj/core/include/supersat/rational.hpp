#ifndef SUPERSAT_RATIONAL_HPP
#define SUPERSAT_RATIONAL_HPP

#include <string>

#include "supersat/bigint.hpp"

namespace supersat {

/// Exact rational with reduced BigInt numerator/denominator, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(long long n) : num_(n), den_(1) {}          // NOLINT
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    Rational abs() const;
    Rational pow(unsigned e) const;

    int compare(const Rational& o) const;
    bool operator==(const Rational& o) const { return compare(o) == 0; }
    bool operator!=(const Rational& o) const { return compare(o) != 0; }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    /// "p/q", or just "p" when q = 1.
    std::string to_string() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_, den_;
    void reduce();
};

/// Falling factorial x(x-1)...(x-k+1); the empty product is 1.
Rational falling_factorial(const Rational& x, unsigned k);

}  // namespace supersat

#endif
