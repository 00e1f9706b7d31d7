#include "sumsetlab/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sumsetlab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t u =
      negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (u != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

BigInt::BigInt(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt acc;
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in numeral");
    acc *= ten;
    acc += BigInt(s[i] - '0');
  }
  limbs_ = std::move(acc.limbs_);
  negative_ = neg && !limbs_.empty();
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0u);
    a[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<std::uint32_t>(d);
  }
}

std::vector<std::uint32_t> BigInt::mul_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + ai * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t j = i + b.size();
    while (carry) {
      std::uint64_t cur = r[j] + carry;
      r[j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++j;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
  quot.clear();
  rem.clear();
  if (den.empty()) throw std::domain_error("BigInt: division by zero");
  if (compare_mag(num, den) < 0) {
    rem = num;
    return;
  }
  if (den.size() == 1) {
    std::uint64_t d = den[0];
    quot.assign(num.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = num.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | num[i];
      quot[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    if (r) rem.push_back(static_cast<std::uint32_t>(r));
    return;
  }

  // Normalize so the divisor's top limb has its high bit set.
  int shift = 0;
  for (std::uint32_t top = den.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  auto shl = [shift](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out(v.size() + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] |= shift ? (v[i] << shift) : v[i];
      if (shift) out[i + 1] |= static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(v[i]) >> (32 - shift));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  std::vector<std::uint32_t> u = shl(num);
  std::vector<std::uint32_t> v = shl(den);
  const std::size_t n = v.size();
  const std::size_t m = num.size() + 1 - n;  // quotient limb count bound
  u.resize(num.size() + 1, 0);
  quot.assign(m, 0);

  const std::uint64_t vtop = v[n - 1];
  const std::uint64_t vsec = v[n - 2];
  for (std::size_t j = m; j-- > 0;) {
    std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = numer / vtop;
    std::uint64_t rhat = numer % vtop;
    while (qhat >= kBase ||
           qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat >= kBase) break;
    }
    // u[j..j+n] -= qhat * v
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow -
                       static_cast<std::int64_t>(p & 0xffffffffu);
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow -
                     static_cast<std::int64_t>(carry);
    if (t < 0) {
      // qhat was one too large; add the divisor back.
      t += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = c2 + u[i + j] + v[i];
        u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      t += static_cast<std::int64_t>(c2);
    }
    u[j + n] = static_cast<std::uint32_t>(t);
    quot[j] = static_cast<std::uint32_t>(qhat);
  }
  while (!quot.empty() && quot.back() == 0) quot.pop_back();

  u.resize(n);
  if (shift) {
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
      u[i] = (u[i] >> shift) |
             static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i + 1])
                                        << (32 - shift));
    u.back() >>= shift;
  }
  while (!u.empty() && u.back() == 0) u.pop_back();
  rem = std::move(u);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (negative_ == o.negative_) {
    add_mag(limbs_, o.limbs_);
  } else if (compare_mag(limbs_, o.limbs_) >= 0) {
    sub_mag(limbs_, o.limbs_);
  } else {
    std::vector<std::uint32_t> tmp = o.limbs_;
    sub_mag(tmp, limbs_);
    limbs_ = std::move(tmp);
    negative_ = o.negative_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  negative_ = negative_ != o.negative_;
  limbs_ = mul_mag(limbs_, o.limbs_);
  if (limbs_.empty()) negative_ = false;
  return *this;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                    BigInt& rem) {
  std::vector<std::uint32_t> q, r;
  divmod_mag(num.limbs_, den.limbs_, q, r);
  quot.limbs_ = std::move(q);
  rem.limbs_ = std::move(r);
  quot.negative_ = !quot.limbs_.empty() && (num.negative_ != den.negative_);
  rem.negative_ = !rem.limbs_.empty() && num.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

int BigInt::compare(const BigInt& o) const {
  if (negative_ != o.negative_) return negative_ ? -1 : 1;
  int c = compare_mag(limbs_, o.limbs_);
  return negative_ ? -c : c;
}

BigInt BigInt::pow(unsigned long e) const {
  BigInt base = *this;
  BigInt acc(1);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag =
      (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  // unsigned negation also covers the INT64_MIN magnitude
  return static_cast<std::int64_t>(negative_ ? 0 - mag : mag);
}

double BigInt::to_double() const {
  double r = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
  return negative_ ? -r : r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    // divide magnitude by 10^9, emit the remainder
    std::uint64_t r = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      r = cur % 1000000000u;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + r % 10));
      r /= 10;
      if (mag.empty() && r == 0) break;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace sumsetlab
