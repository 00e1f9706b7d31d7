#ifndef SUMSETLAB_BIGINT_HPP
#define SUMSETLAB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sumsetlab {

// Arbitrary-precision signed integer, sign + little-endian 32-bit limbs.
// Magnitude vectors never carry leading zero limbs; zero has an empty
// magnitude and non-negative sign.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);
  explicit BigInt(std::string_view decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  // Truncated division (C semantics): quotient rounds toward zero,
  // remainder has the dividend's sign. Throws on zero divisor.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                     BigInt& rem);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // -1, 0, +1 as *this <,=,> o
  int compare(const BigInt& o) const;
  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) {
    return a.compare(b) != 0;
  }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) {
    return a.compare(b) <= 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) {
    return a.compare(b) > 0;
  }
  friend bool operator>=(const BigInt& a, const BigInt& b) {
    return a.compare(b) >= 0;
  }

  BigInt pow(unsigned long exponent) const;
  static BigInt gcd(BigInt a, BigInt b);  // non-negative result

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws if out of range
  double to_double() const;       // may overflow to +/-inf
  std::string to_string() const;

private:
  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;

  void trim();
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static void add_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static void sub_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& num,
                         const std::vector<std::uint32_t>& den,
                         std::vector<std::uint32_t>& quot,
                         std::vector<std::uint32_t>& rem);
};

}  // namespace sumsetlab

#endif
