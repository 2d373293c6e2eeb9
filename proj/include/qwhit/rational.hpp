// Exact arithmetic scalars: arbitrary-precision integers/rationals (GMP) and
// rational complex numbers for exact spectral values.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qwhit {

using BigInt = mpz_class;
using Rat = mpq_class;

/// q^e for integer e of either sign; throws on 0^negative.
inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  out.canonicalize();
  if (e < 0) return Rat(1) / out;
  return out;
}

/// Parses "a", "-a", or "a/b". Shell-safe exact input form.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

struct RatComplex {
  Rat re{0};
  Rat im{0};

  RatComplex() = default;
  RatComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit RatComplex(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }

  RatComplex& scale(const Rat& s) {
    re *= s;
    im *= s;
    return *this;
  }

  RatComplex& operator+=(const RatComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  RatComplex& operator-=(const RatComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend RatComplex operator+(RatComplex a, const RatComplex& b) { return a += b; }
  friend RatComplex operator-(RatComplex a, const RatComplex& b) { return a -= b; }
  friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RatComplex operator*(const RatComplex& a, const Rat& s) { return {a.re * s, a.im * s}; }
  friend bool operator==(const RatComplex& a, const RatComplex& b) = default;
};

/// z^e, e of either sign; throws on 0^negative.
inline RatComplex ratc_pow(const RatComplex& z, long e) {
  if (e < 0) {
    Rat n2 = z.re * z.re + z.im * z.im;
    if (n2 == 0) throw std::domain_error("ratc_pow: zero base with negative exponent");
    RatComplex inv{z.re / n2, Rat(0) - z.im / n2};
    return ratc_pow(inv, -e);
  }
  RatComplex acc{Rat(1), Rat(0)};
  RatComplex b = z;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

inline std::string ratc_str(const RatComplex& z) {
  if (z.im == 0) return rat_str(z.re);
  return rat_str(z.re) + (z.im > 0 ? "+" : "") + rat_str(z.im) + "i";
}

}  // namespace qwhit
