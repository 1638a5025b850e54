#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cactus {

/// Exact signed integer. Counts are nonnegative by construction but share the type
/// with recurrence coefficients and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using BigCount = BigInt;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const BigRational& value);

}  // namespace cactus
