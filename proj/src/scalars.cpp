#include "grpd/scalars.hpp"

#include <cctype>
#include <stdexcept>

namespace grpd {

Rational::Rational(long long value) : value_(static_cast<long>(value)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return Rational(to_mpz(text), 1);
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(to_mpz(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Gaussian::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "i";
  }
  if (re.is_zero()) return imag;
  if (im.sign() > 0) return re.str() + "+" + imag;
  return re.str() + imag;
}

Gaussian& Gaussian::operator+=(const Gaussian& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& rhs) {
  Rational r = re * rhs.re - im * rhs.im;
  Rational i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }

SqValue::SqValue(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0) {
    throw std::domain_error("squared norm must be nonnegative, got " + value_.str());
  }
}

SqValue abs_sq(const Gaussian& z) { return SqValue(z.re * z.re + z.im * z.im); }

bool sqrt_leq(const SqValue& a, const SqValue& b, const SqValue& c) {
  Rational t = a.value() - b.value() - c.value();
  if (t.sign() <= 0) return true;
  return t * t <= Rational(4) * b.value() * c.value();
}

}  // namespace grpd
