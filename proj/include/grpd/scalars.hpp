#ifndef GRPD_SCALARS_HPP
#define GRPD_SCALARS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grpd {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

/// Complex number with rational components.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static Gaussian i() { return {0, 1}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  /// "a", "bi", "a+bi" or "a-bi" with rational a, b.
  std::string str() const;

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& rhs);
  Gaussian& operator-=(const Gaussian& rhs);
  Gaussian& operator*=(const Gaussian& rhs);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }

  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

Gaussian conj(const Gaussian& z);

/// A nonnegative rational standing for the square of a norm.
class SqValue {
 public:
  SqValue() = default;
  /// Throws std::domain_error on a negative value.
  explicit SqValue(Rational value);
  SqValue(long long value) : SqValue(Rational(value)) {}  // NOLINT

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const SqValue&, const SqValue&) = default;
  friend std::strong_ordering operator<=>(const SqValue& a, const SqValue& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

/// re^2 + im^2.
SqValue abs_sq(const Gaussian& z);

/// Decides sqrt(a) <= sqrt(b) + sqrt(c) without leaving the rationals:
/// true when a <= b + c, otherwise true iff (a - b - c)^2 <= 4bc.
bool sqrt_leq(const SqValue& a, const SqValue& b, const SqValue& c);

}  // namespace grpd

#endif  // GRPD_SCALARS_HPP
