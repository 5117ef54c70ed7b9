#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bisetkit/error.hpp"

namespace bisetkit {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  require(den != 0, ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    fail(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

using RationalVector = std::vector<Rational>;

}  // namespace bisetkit
