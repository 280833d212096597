#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cyarith {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace cyarith
