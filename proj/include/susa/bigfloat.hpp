#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "susa/rational.hpp"

namespace susa {

// 100 decimal digits of working precision; plenty for every figure
// rendered or compared by this project (tests rely on >= 50 digits).
using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigFloat to_bigfloat(const Rational& x);
double to_double(const Rational& x);

const BigFloat& big_pi();

}  // namespace susa
