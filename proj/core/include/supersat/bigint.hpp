#ifndef SUPERSAT_BIGINT_HPP
#define SUPERSAT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace supersat {

/// Arbitrary-precision signed integer, sign + 32-bit-limb magnitude.
/// Schoolbook arithmetic; desk-scale values stay tiny, so simplicity wins.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    BigInt abs() const;
    BigInt operator-() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated division; remainder takes the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    int compare(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    BigInt pow(unsigned e) const;
    static BigInt gcd(BigInt a, BigInt b);
    static BigInt factorial(unsigned k);

    std::string to_string() const;
    double to_double() const;
    /// Throws Error when the value does not fit.
    long long to_int64() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no leading zeros

    void trim();
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
};

inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace supersat

#endif
