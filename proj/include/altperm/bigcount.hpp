#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace altperm {

// Arbitrary-precision nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace altperm
