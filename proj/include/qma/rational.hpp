#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qma {

// Exact arbitrary-precision rationals; all coefficient arithmetic in the
// engine goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

} // namespace qma
