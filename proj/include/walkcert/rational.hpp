#pragma once

// Exact integer / rational scalars backed by GMP, plus text conversions.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace walkcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed input or a parameter outside an operation's domain.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction that should be impossible failed its own exact check.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw input_error("malformed rational '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw input_error("malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits));
}

inline Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace detail

/// Accepts "p/q", "-7", "0.25", "1e-6", "-2.5E3".
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw input_error("empty rational");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(text.substr(0, slash), whole);
    Integer den = detail::parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw input_error("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      Integer ez = detail::parse_integer(exp_part, whole);
      if (ez > 10000) throw input_error("exponent too large in '" + std::string(whole) + "'");
      exponent = ez.get_si();
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = text.substr(0, dot);
      std::string_view frac_part = text.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw input_error("malformed rational '" + std::string(whole) + "'");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(text);
    }
    Integer mantissa = detail::parse_integer(digits, whole);
    if (exponent >= 0) {
      value = Rational(mantissa * detail::pow10(static_cast<unsigned long>(exponent)));
    } else {
      value = Rational(mantissa, detail::pow10(static_cast<unsigned long>(-exponent)));
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational pow(const Rational& base, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace walkcert
