#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permemc {

/// Exact non-negative counts (d_n, permanents, factorials) and exact
/// rationals for every inequality the library evaluates.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Two objects that must live on the same ground set [n] do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input exceeds a documented enumeration or kernel cap.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

BigInt factorial(unsigned n);

Rational pow(const Rational& base, unsigned exponent);

/// Parses "3", "-2", "5/2" or a finite decimal such as "2.5" / "1e-3"
/// into an exact rational. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Floor of a rational (towards negative infinity).
BigInt floor(const Rational& value);

/// Conservative rational upper bound on Euler's number (2.7182818285 > e).
Rational euler_upper_bound();

/// Worker count for parallel kernels: PERMEMC_THREADS if set to a positive
/// integer, otherwise the machine parallelism (at least 1).
unsigned worker_count();

}  // namespace permemc
