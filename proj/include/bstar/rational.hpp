#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

#include "bstar/errors.hpp"

namespace bstar {

/// Exact rational scalar. Always reduced to lowest terms with a positive
/// denominator; the canonical zero is 0/1. Arithmetic never rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws Error on malformed text.
  static Rational from_string(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonnegative() const { return sgn(v_) >= 0; }

  /// The value as a long; requires an integer that fits.
  long to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
      throw Error("rational is not a machine integer: " + str());
    return v_.get_num().get_si();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Nonnegative integer power.
  Rational pow(long e) const {
    if (e < 0) throw Error("negative exponent");
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(r);
  }

  /// "p" or "p/q".
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.raw()))); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::from_string(const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw Error("malformed rational: '" + text + "'");
  if (v.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
  v.canonicalize();
  return Rational(v);
}

}  // namespace bstar
