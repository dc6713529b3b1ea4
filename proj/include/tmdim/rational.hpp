#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmdim {

/// Exact rational number. Always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or an integer string ("-3", "17"). Surrounding blanks are
/// not accepted; the denominator must be positive after canonicalization.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  auto strip_plus = [](std::string_view s) { return s[0] == '+' ? s.substr(1) : s; };
  Integer p(std::string(strip_plus(num)), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Lowest-terms text, integers without a denominator ("3", "-1/2").
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Lowest-terms text that always carries a denominator ("3/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// n! / (n-k)!
inline Integer falling_factorial(unsigned n, unsigned k) {
  Integer out(1);
  for (unsigned i = 0; i < k; ++i) out *= (n - i);
  return out;
}

}  // namespace tmdim
