#include "gaugenorm/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "gaugenorm/errors.hpp"

namespace gaugenorm {

namespace {

detail::Int128 abs128(detail::Int128 v) { return v < 0 ? -v : v; }

detail::Int128 gcd128(detail::Int128 a, detail::Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    detail::Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(detail::Int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(detail::Int128 num, detail::Int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  detail::Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw NumericalError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<detail::Int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::from_wide(static_cast<detail::Int128>(a.num_) + b.num_, a.den_);
  return Rational::from_wide(static_cast<detail::Int128>(a.num_) * b.den_ + static_cast<detail::Int128>(b.num_) * a.den_,
                             static_cast<detail::Int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<detail::Int128>(a.num_) * b.num_, static_cast<detail::Int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational::from_wide(static_cast<detail::Int128>(a.num_) * b.den_, static_cast<detail::Int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  detail::Int128 lhs = static_cast<detail::Int128>(a.num_) * b.den_;
  detail::Int128 rhs = static_cast<detail::Int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw ParseError("not a rational: '" + std::string(text) + "'");
  return *r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Scalar Scalar::parse(std::string_view text) {
  if (auto r = Rational::try_parse(text)) return Scalar(*r);
  std::string s(trim(text));
  if (s.empty()) throw ParseError("empty numeric literal");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) throw ParseError("not a number: '" + s + "'");
  return Scalar(v);
}

std::string Scalar::str() const {
  if (exact) return exact->str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace gaugenorm
