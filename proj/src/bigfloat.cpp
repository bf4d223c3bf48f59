#include "susa/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>

namespace susa {

BigFloat to_bigfloat(const Rational& x) {
    BigFloat n(x.numerator());
    BigFloat d(x.denominator());
    BigFloat v = n / d;
    return x.sign() < 0 ? BigFloat(-v) : v;
}

double to_double(const Rational& x) { return to_bigfloat(x).convert_to<double>(); }

const BigFloat& big_pi() {
    static const BigFloat pi = boost::math::constants::pi<BigFloat>();
    return pi;
}

}  // namespace susa
