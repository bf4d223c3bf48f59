#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace susa {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator and denominator.
// Invariants: denominator > 0, gcd(numerator, denominator) = 1,
// sign in {-1, 0, +1} and sign = 0 iff numerator = 0.
class Rational {
public:
    Rational() : sign_(0), num_(0), den_(1) {}
    Rational(long long n) : Rational(BigInt(n)) {}
    Rational(const BigInt& n);
    Rational(const BigInt& n, const BigInt& d);

    int sign() const { return sign_; }
    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return sign_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Signed numerator; numerator() itself is the magnitude.
    BigInt signed_numerator() const { return sign_ < 0 ? BigInt(-num_) : num_; }

    Rational operator-() const;
    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(long long exponent) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "n/d", or just "n" for integers; negative values carry a leading '-'.
    std::string to_string() const;

private:
    int sign_;
    BigInt num_;  // magnitude
    BigInt den_;  // positive
};

}  // namespace susa
