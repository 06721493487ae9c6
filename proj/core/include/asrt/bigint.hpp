#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace asrt {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace asrt
