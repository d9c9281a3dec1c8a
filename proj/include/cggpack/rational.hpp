#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cggpack {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serialize as "p" or "p/q"; all artifact files carry rationals in this form.
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q", and optional leading '-'. Throws precondition_error on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& r);

inline BigInt binomial2(const BigInt& n) { return n * (n - 1) / 2; }

} // namespace cggpack
