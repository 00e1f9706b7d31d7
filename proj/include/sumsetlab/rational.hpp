#ifndef SUMSETLAB_RATIONAL_HPP
#define SUMSETLAB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "sumsetlab/bigint.hpp"

namespace sumsetlab {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}
  Rational(std::int64_t num, std::int64_t den)
      : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);
  // Parses "p", "p/q" or a plain decimal like "1.25".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  int compare(const Rational& o) const;
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.compare(b) != 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.compare(b) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.compare(b) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.compare(b) >= 0;
  }

  BigInt floor() const;
  BigInt ceil() const;
  Rational pow(long exponent) const;  // negative exponents allowed when nonzero
  Rational abs() const;

  double to_double() const;
  // "p/q", or just "p" for integers.
  std::string to_string() const;
  // Fixed-point decimal with the given fractional digits, round half up.
  std::string to_decimal_string(int digits) const;

private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

}  // namespace sumsetlab

#endif
