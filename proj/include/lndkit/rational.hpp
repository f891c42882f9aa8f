#ifndef LNDKIT_RATIONAL_HPP
#define LNDKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace lnd {

// Exact rational number. Always stored reduced with a positive denominator;
// the canonical zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d);
  explicit Rational(mpq_class v);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);

  // Accepts "a", "-a", "a/b" with optional surrounding spaces.
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  Rational pow(unsigned k) const;

  std::string str() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lnd

#endif  // LNDKIT_RATIONAL_HPP
