#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ranklab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" always, even for integers; the CSV form.
inline std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Integers print without "/1".
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ranklab
