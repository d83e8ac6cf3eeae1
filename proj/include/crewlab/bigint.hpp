#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace crewlab {

// Signed arbitrary-precision integer: sign plus little-endian base-2^32
// magnitude. Supports the operations the exact layers need (ring arithmetic,
// powers, division by machine-word divisors); nothing more.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt power(std::uint64_t base, std::uint64_t exp);

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;

    bool fits_int64() const;
    long long to_int64() const; // throws Error("int64-overflow") when too wide
    double to_double() const;
    std::string str() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs) { *this = *this * rhs; return *this; }

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Quotient and remainder for a machine-word divisor d > 0; the remainder
    // carries the sign of the dividend (truncated division).
    std::pair<BigInt, long long> divmod(std::uint32_t d) const;
    BigInt divexact(std::uint32_t d) const; // throws Error("inexact-division")

    bool operator==(const BigInt& rhs) const;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

private:
    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> mag_;    // no leading zero limbs; empty iff zero

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

} // namespace crewlab
