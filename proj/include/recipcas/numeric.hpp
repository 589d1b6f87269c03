#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace recipcas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace recipcas
