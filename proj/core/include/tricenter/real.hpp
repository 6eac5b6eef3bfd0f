#pragma once

#include <cmath>
#include <limits>

#ifdef TRICENTER_EXTENDED_PRECISION
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#endif

namespace tricenter {

#ifdef TRICENTER_EXTENDED_PRECISION
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<TRICENTER_MANTISSA_BITS,
                                         boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline bool is_finite(const Real& x) { return (boost::math::isfinite)(x); }
#else
using Real = double;

inline bool is_finite(Real x) { return std::isfinite(x); }
#endif

inline double to_double(const Real& x) { return static_cast<double>(x); }

inline Real nan_real() { return Real(std::numeric_limits<double>::quiet_NaN()); }

inline Real pi() {
  using std::acos;
  return acos(Real(-1));
}

inline Real sqrt3() {
  using std::sqrt;
  return sqrt(Real(3));
}

}  // namespace tricenter
