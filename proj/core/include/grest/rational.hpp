#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "grest/errors.hpp"

namespace grest {

// Exact rational arithmetic for weights and cost certificates. Arbitrary
// precision so repeated weight decompositions never overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "3", "-2/7" and decimal strings like "0.25".
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

}  // namespace grest
