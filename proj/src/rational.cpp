#include "sumsetlab/rational.hpp"

#include <stdexcept>

namespace sumsetlab {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return Rational(BigInt(text.substr(0, slash)),
                    BigInt(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(BigInt(text), BigInt(1));
  std::string digits(text.substr(0, dot));
  std::string frac(text.substr(dot + 1));
  if (frac.empty()) return Rational(BigInt(digits), BigInt(1));
  digits += frac;
  return Rational(BigInt(digits), BigInt(10).pow(frac.size()));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& o) const {
  return (num_ * o.den_).compare(o.num_ * den_);
}

BigInt Rational::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (!r.is_zero() && num_.is_negative()) q -= BigInt(1);
  return q;
}

BigInt Rational::ceil() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (!r.is_zero() && !num_.is_negative()) q += BigInt(1);
  return q;
}

Rational Rational::pow(long e) const {
  if (e >= 0)
    return Rational(num_.pow(static_cast<unsigned long>(e)),
                    den_.pow(static_cast<unsigned long>(e)));
  if (is_zero()) throw std::domain_error("Rational: 0 to negative power");
  return Rational(den_.pow(static_cast<unsigned long>(-e)),
                  num_.pow(static_cast<unsigned long>(-e)));
}

Rational Rational::abs() const {
  return num_.is_negative() ? -*this : *this;
}

double Rational::to_double() const {
  return num_.to_double() / den_.to_double();
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal_string(int digits) const {
  BigInt scale = BigInt(10).pow(static_cast<unsigned long>(digits));
  BigInt scaled = num_ * scale;
  bool neg = scaled.is_negative();
  scaled = scaled.abs();
  // round half up on the magnitude
  BigInt q, r;
  BigInt::divmod(scaled, den_, q, r);
  if (r + r >= den_) q += BigInt(1);
  std::string s = q.to_string();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (neg) s.insert(0, "-");
  return s;
}

}  // namespace sumsetlab
