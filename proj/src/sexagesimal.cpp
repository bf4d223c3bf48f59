#include "susa/sexagesimal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

#include "susa/errors.hpp"

namespace susa {

namespace {

BigInt pow60(int k) {
    BigInt v = 1;
    for (int i = 0; i < k; ++i) v *= 60;
    return v;
}

std::vector<int> parse_digit_groups(const std::string& part, const std::string& text) {
    std::vector<int> digits;
    size_t pos = 0;
    while (true) {
        size_t comma = part.find(',', pos);
        std::string group = part.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (group.empty() || group.size() > 2)
            throw ParseError("bad sexagesimal digit group in '" + text + "'");
        int value = 0;
        for (char c : group) {
            if (c < '0' || c > '9') throw ParseError("bad sexagesimal digit group in '" + text + "'");
            value = value * 10 + (c - '0');
        }
        if (value > 59) throw ParseError("sexagesimal digit out of range in '" + text + "'");
        digits.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return digits;
}

// Splits |N| * 60^-places into digit groups, stripping trailing zeros
// from the fraction.
void extract_digits(BigInt n, int places, SexagesimalDigits& out) {
    std::vector<int> frac(places);
    for (int i = places - 1; i >= 0; --i) {
        frac[i] = static_cast<int>(n % 60);
        n /= 60;
    }
    while (!frac.empty() && frac.back() == 0) frac.pop_back();
    std::vector<int> ints;
    if (n == 0) {
        ints.push_back(0);
    } else {
        while (n > 0) {
            ints.push_back(static_cast<int>(n % 60));
            n /= 60;
        }
        std::reverse(ints.begin(), ints.end());
    }
    out.integer_digits = std::move(ints);
    out.fraction_digits = std::move(frac);
}

}  // namespace

std::string SexagesimalDigits::to_string() const {
    std::string s;
    if (sign < 0) s += "-";
    for (size_t i = 0; i < integer_digits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(integer_digits[i]);
    }
    if (!fraction_digits.empty()) {
        s += ";";
        for (size_t i = 0; i < fraction_digits.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(fraction_digits[i]);
        }
    }
    return s;
}

Rational SexagesimalDigits::to_rational() const {
    BigInt scaled = 0;
    for (int d : integer_digits) scaled = scaled * 60 + d;
    for (int d : fraction_digits) scaled = scaled * 60 + d;
    BigInt den = pow60(static_cast<int>(fraction_digits.size()));
    if (sign < 0) scaled = -scaled;
    return Rational(scaled, den);
}

Rational parse_sexagesimal(const std::string& text) {
    if (text.empty()) throw ParseError("empty sexagesimal literal");
    size_t pos = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    std::string body = text.substr(pos);
    if (body.empty()) throw ParseError("empty sexagesimal literal");

    size_t semi = body.find(';');
    std::string int_part = semi == std::string::npos ? body : body.substr(0, semi);
    std::vector<int> int_digits = parse_digit_groups(int_part, text);
    std::vector<int> frac_digits;
    if (semi != std::string::npos) {
        if (body.find(';', semi + 1) != std::string::npos)
            throw ParseError("multiple ';' in '" + text + "'");
        frac_digits = parse_digit_groups(body.substr(semi + 1), text);
    }

    SexagesimalDigits d;
    d.sign = negative ? -1 : 1;
    d.integer_digits = std::move(int_digits);
    d.fraction_digits = std::move(frac_digits);
    return d.to_rational();
}

SexagesimalDigits render_sexagesimal(const Rational& x, int max_places, RenderMode mode) {
    if (max_places < 0) throw DomainError("negative digit budget");
    SexagesimalDigits out;
    if (x.is_zero()) return out;

    BigInt scaled_num = x.numerator() * pow60(max_places);
    BigInt n = scaled_num / x.denominator();
    BigInt rem = scaled_num % x.denominator();
    bool exact = rem == 0;
    if (!exact && mode == RenderMode::require_exact)
        throw DomainError("value does not terminate within " + std::to_string(max_places) +
                          " sexagesimal places");
    if (!exact && mode == RenderMode::nearest && 2 * rem >= x.denominator()) n += 1;

    out.sign = x.sign();
    out.exact = exact;
    extract_digits(n, max_places, out);
    return out;
}

SexagesimalDigits render_sexagesimal(const BigFloat& x, int max_places) {
    if (max_places < 0) throw DomainError("negative digit budget");
    SexagesimalDigits out;
    if (x == 0) return out;

    BigFloat mag = boost::multiprecision::abs(x);
    BigFloat scaled = mag;
    for (int i = 0; i < max_places; ++i) scaled *= 60;
    // Values a rounding error away from an integer are treated as that
    // integer, so terminating inputs survive the float round trip.
    static const BigFloat near_tol("1e-90");
    BigFloat rounded = boost::multiprecision::round(scaled);
    BigInt n;
    if (boost::multiprecision::abs(scaled - rounded) <= scaled * near_tol) {
        n = rounded.convert_to<BigInt>();
        out.exact = true;
    } else {
        n = boost::multiprecision::floor(scaled).convert_to<BigInt>();
        out.exact = false;
    }
    out.sign = x < 0 ? -1 : 1;
    extract_digits(n, max_places, out);
    return out;
}

bool is_regular(const BigInt& n) {
    if (n <= 0) throw DomainError("regularity is defined for positive integers");
    BigInt m = n;
    for (int p : {2, 3, 5})
        while (m % p == 0) m /= p;
    return m == 1;
}

Rational parse_number(const std::string& text) {
    if (text.find(';') != std::string::npos || text.find(',') != std::string::npos)
        return parse_sexagesimal(text);

    if (text.empty()) throw ParseError("empty numeric literal");
    size_t pos = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    std::string body = text.substr(pos);
    if (body.empty()) throw ParseError("empty numeric literal");

    size_t dot = body.find('.');
    std::string int_part = dot == std::string::npos ? body : body.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : body.substr(dot + 1);
    if (int_part.empty() || (dot != std::string::npos && frac_part.empty()))
        throw ParseError("bad decimal literal '" + text + "'");
    // Accumulate digits directly; a string constructor would read a
    // leading zero as an octal prefix.
    BigInt num = 0;
    for (char c : int_part + frac_part) {
        if (c < '0' || c > '9') throw ParseError("bad numeric literal '" + text + "'");
        num = num * 10 + (c - '0');
    }
    BigInt den = 1;
    for (size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    if (negative) num = -num;
    return Rational(num, den);
}

Rational truncate_places(const Rational& x, int places) {
    if (places < 0) throw DomainError("negative digit budget");
    if (x.is_zero()) return Rational(0);
    BigInt p60 = pow60(places);
    BigInt n = x.numerator() * p60 / x.denominator();
    if (x.sign() < 0) n = -n;
    return Rational(n, p60);
}

}  // namespace susa
