#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace alres {

// All polynomial coefficients are exact arbitrary-precision integers;
// fractions only ever appear at the rational-function level.  Expression
// templates are off so arithmetic results are plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Int int_gcd(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Int int_abs(const Int& a)
{
    return boost::multiprecision::abs(a);
}

} // namespace alres
