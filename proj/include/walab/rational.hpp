#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace walab {

// Every quantity in the core is an exact rational; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical serialization: reduced, positive denominator, "num/den",
/// plain "num" when the denominator is 1.
std::string rat_str(const Rat& r);

/// Inverse of rat_str. Accepts "a/b" or "a". Throws std::invalid_argument.
Rat rat_parse(std::string_view s);

bool is_integer(const Rat& r);

/// For integral rationals only; throws otherwise.
BigInt as_integer(const Rat& r);

} // namespace walab
