#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace biasham {

/// Exact rational with a positive denominator, always kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Accepts "p/q", plain integers and finite decimals such as "0.3".
  static Rational parse(std::string_view text);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// ceil(q * n) computed exactly.
std::int64_t ceil_mul(const Rational& q, std::int64_t n);

/// floor(q * n) computed exactly.
std::int64_t floor_mul(const Rational& q, std::int64_t n);

}  // namespace biasham
