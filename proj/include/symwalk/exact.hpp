#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <ios>
#include <string>

namespace symwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

/// Binomial coefficient with the convention C(a, b) = 0 whenever b < 0,
/// b > a or a < 0. The hook-character closed forms depend on it.
inline BigInt binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (int i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  return BigRational(num, den);
}

inline bool is_integer(const BigRational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Lowest-terms "numerator/denominator"; the denominator is always written.
inline std::string to_exact_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(text));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + text);
  return BigRational(BigInt(text.substr(0, slash)), den);
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

/// Scientific notation with `digits` significant digits, e.g.
/// "1.6666666666666666667e-01".
inline std::string to_decimal_string(const BigRational& q, int digits = 20) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal value = Decimal(boost::multiprecision::numerator(q)) /
                        Decimal(boost::multiprecision::denominator(q));
  return value.str(digits - 1, std::ios_base::scientific);
}

}  // namespace symwalk
