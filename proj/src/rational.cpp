#include "biasham/rational.hpp"

#include <charconv>
#include <numeric>

#include "biasham/error.hpp"

namespace biasham {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw Error(Errc::invalid_argument, "rational overflow");
  }
  return static_cast<std::int64_t>(value);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::invalid_argument,
                "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) {
      throw Error(Errc::invalid_argument, "too many decimal places");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    if (f < 0) throw Error(Errc::invalid_argument, "malformed decimal");
    const std::int64_t num = w * den + f;
    return Rational(negative ? -num : num, den);
  }
  return Rational(parse_int(text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.num_,
              static_cast<Wide>(a.den_) * b.den_);
}

std::int64_t floor_mul(const Rational& q, std::int64_t n) {
  const Wide p = static_cast<Wide>(q.num()) * n;
  Wide d = p / q.den();
  if (p % q.den() != 0 && p < 0) --d;
  return narrow(d);
}

std::int64_t ceil_mul(const Rational& q, std::int64_t n) {
  const Wide p = static_cast<Wide>(q.num()) * n;
  Wide d = p / q.den();
  if (p % q.den() != 0 && p > 0) ++d;
  return narrow(d);
}

}  // namespace biasham
