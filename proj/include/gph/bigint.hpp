#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace gph
