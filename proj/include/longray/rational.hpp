#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace longray {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t integer) : num_(integer) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw InvalidInput("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational operator-() const { return Rational(-num_, den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact decimal rendering when the denominator has only factors 2 and 5,
/// "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());

  const int digits = std::max(twos, fives);
  // Scale to num * 10^digits / den, which is an integer.
  __int128 scaled = r.numerator();
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= r.denominator();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body;
  do {
    body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  } while (scaled != 0);
  if (digits > 0) {
    while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
    body.insert(body.end() - digits, '.');
  }
  return (negative ? "-" : "") + body;
}

/// Parses DIGITS ["." DIGITS] with at most 18 digits in total.
/// Returns false on malformed input.
inline bool parse_decimal(std::string_view text, Rational& out) {
  std::int64_t whole = 0, frac = 0, scale = 1;
  std::size_t i = 0, int_digits = 0, frac_digits = 0;
  for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i, ++int_digits) {
    whole = whole * 10 + (text[i] - '0');
  }
  if (int_digits == 0 || int_digits > 18) return false;
  if (i < text.size()) {
    if (text[i] != '.') return false;
    for (++i; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i, ++frac_digits) {
      frac = frac * 10 + (text[i] - '0');
      scale *= 10;
    }
    if (frac_digits == 0 || int_digits + frac_digits > 18 || i != text.size()) return false;
  }
  out = Rational(whole * scale + frac, scale);
  return true;
}

}  // namespace longray
