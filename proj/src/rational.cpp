#include "susa/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "susa/errors.hpp"

namespace susa {

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

Rational::Rational(const BigInt& n) : sign_(n == 0 ? 0 : (n < 0 ? -1 : 1)), num_(big_abs(n)), den_(1) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DomainError("rational denominator is zero");
    BigInt sn = n;
    BigInt sd = d;
    if (sd < 0) {
        sn = -sn;
        sd = -sd;
    }
    sign_ = sn == 0 ? 0 : (sn < 0 ? -1 : 1);
    num_ = big_abs(sn);
    den_ = sd;
    if (sign_ == 0) {
        den_ = 1;
    } else {
        BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

Rational Rational::reciprocal() const {
    if (sign_ == 0) throw DomainError("reciprocal of zero");
    Rational r;
    r.sign_ = sign_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

Rational Rational::pow(long long exponent) const {
    if (exponent == 0) return Rational(1);
    if (sign_ == 0) {
        if (exponent < 0) throw DomainError("zero raised to a negative power");
        return Rational(0);
    }
    Rational base = exponent < 0 ? reciprocal() : *this;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                        : static_cast<unsigned long long>(exponent);
    Rational r;
    r.sign_ = (base.sign_ < 0 && (e % 2 == 1)) ? -1 : 1;
    r.num_ = boost::multiprecision::pow(base.num_, static_cast<unsigned>(e));
    r.den_ = boost::multiprecision::pow(base.den_, static_cast<unsigned>(e));
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    BigInt n = a.signed_numerator() * b.den_ + b.signed_numerator() * a.den_;
    return Rational(n, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    BigInt n = a.signed_numerator() * b.signed_numerator();
    return Rational(n, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign_ == 0) throw DomainError("division by zero");
    return a * b.reciprocal();
}

bool operator==(const Rational& a, const Rational& b) {
    return a.sign_ == b.sign_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.signed_numerator() * b.den_;
    BigInt rhs = b.signed_numerator() * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string s;
    if (sign_ < 0) s += "-";
    s += num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

}  // namespace susa
