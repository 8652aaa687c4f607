#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace detvar {

/// Arbitrary-precision signed integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

/// binom(a, b) with the convention binom(a, b) = 0 whenever a < b, a < 0 or b < 0.
inline Integer binomial(long long a, long long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  Integer result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

/// (-1)^e
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_decimal(const Integer& x) { return x.str(); }

inline Integer from_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start)
    throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed integer literal '" +
                                  std::string(text) + "'");
  return Integer(std::string(text));
}

} // namespace detvar
