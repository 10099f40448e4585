#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace gaugenorm {

namespace detail {
__extension__ typedef __int128 Int128;
}  // namespace detail

// Exact rational with 64-bit numerator and denominator. Always normalized
// (gcd 1, positive denominator). Arithmetic is carried out in 128 bits and
// throws NumericalError if the reduced result does not fit back into 64 bits.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  // Accepts "3", "-2/5", " 7/21 ". Throws ParseError otherwise.
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  static Rational from_wide(detail::Int128 num, detail::Int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A real parameter that may carry an exact rational value. Parsed from either
// "2/3" (exact) or a decimal literal (taken as a binary double).
struct Scalar {
  double value = 0.0;
  std::optional<Rational> exact;

  Scalar() = default;
  Scalar(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : value(r.to_double()), exact(r) {}  // NOLINT(google-explicit-constructor)

  static Scalar parse(std::string_view text);
  std::string str() const;
};

}  // namespace gaugenorm
