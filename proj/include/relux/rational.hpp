// Copyright 2026 The relu-exact Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELUX_RATIONAL_HPP
#define RELUX_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relux {

// Exact arbitrary-precision fraction, always in lowest terms with a
// positive denominator (GMP canonical form). All geometry and LP work
// runs on this type; nothing is ever rounded.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// High-precision float for loss values that are irrational at rational
// weights (|e|^p with fractional p). Precision is configurable at runtime.
using Float = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultFloatDigits = 80;

inline void set_float_precision_digits(unsigned digits) {
  Float::default_precision(digits);
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// floor/ceil as exact integers.
inline Integer floor_int(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline Integer ceil_int(const Rational& q) { return -floor_int(-q); }

// q^e for integer e >= 0, exact.
inline Rational pow_int(const Rational& q, unsigned long e) {
  Rational r(1), base = q;
  while (e > 0) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

inline Float to_float(const Rational& q) { return Float(q); }

// q^p via MPFR at the current working precision (q >= 0 expected).
inline Float pow_float(const Rational& q, const Rational& p) {
  if (q == 0) return Float(0);
  return boost::multiprecision::pow(to_float(q), to_float(p));
}

// Wire format: "3", "-4", "1/8", "-7/3". No floats accepted.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational: " + s);
  }
  // Construct from separate integers so the value is canonicalized.
  auto slash = s.find('/');
  Integer num(slash == std::string::npos ? s : s.substr(0, slash));
  Integer den(slash == std::string::npos ? "1" : s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace relux

#endif  // RELUX_RATIONAL_HPP
