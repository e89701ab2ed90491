#include "permemc/numeric.hpp"

#include <cctype>
#include <cstdlib>
#include <thread>

namespace permemc {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

BigInt pow10(unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), whole);
    const BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string exp_text(text.substr(e + 1));
      char* end = nullptr;
      exponent = std::strtol(exp_text.c_str(), &end, 10);
      if (exp_text.empty() || *end != '\0') {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
      }
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    const BigInt int_value = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    const BigInt frac_value = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, whole);
    const BigInt scale = pow10(static_cast<unsigned>(frac_part.size()));
    value = Rational(int_value * scale + frac_value, scale);
    if (exponent > 0) value *= Rational(pow10(static_cast<unsigned>(exponent)));
    if (exponent < 0) value /= Rational(pow10(static_cast<unsigned>(-exponent)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt floor(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  BigInt quotient = num / den;
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

Rational euler_upper_bound() { return Rational(BigInt(27182818285LL), BigInt(10000000000LL)); }

unsigned worker_count() {
  if (const char* env = std::getenv("PERMEMC_THREADS"); env != nullptr) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && requested > 0) return static_cast<unsigned>(requested);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace permemc
