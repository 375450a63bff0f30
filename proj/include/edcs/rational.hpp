#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace edcs {

// Exact fraction, always in lowest terms with positive denominator.
// Backed by GMP's mpq; canonicalization is automatic for all arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline double rational_to_double(const Rational& q) { return q.get_d(); }

// True iff the decimal expansion terminates (denominator of form 2^a 5^b).
inline bool has_finite_decimal(const Rational& q) {
  mpz_class d = q.get_den();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

// Decimal string with `places` digits after the point, round-half-even.
inline std::string decimal_string(const Rational& q, int places) {
  bool neg = q < 0;
  Rational a = neg ? Rational(-q) : q;
  mpz_class pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  mpz_class num = a.get_num() * pow10;
  mpz_class den = a.get_den();
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  mpz_class twice = rem * 2;
  int cmp = ::cmp(twice, den);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot.get_mpz_t())))
    quot += 1;
  mpz_class ip = quot / pow10;
  mpz_class fp = quot % pow10;
  std::string out = ip.get_str();
  if (places > 0) {
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  if (neg && (ip != 0 || fp != 0)) out.insert(0, "-");
  return out;
}

}  // namespace edcs
