#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kundt {

/// Raised on malformed input: dimension mismatch, singular transform,
/// constraint violation, unparsable text.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every GMP operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);

inline int sign(const Rational& x) { return sgn(x); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline double to_double(const Rational& x) { return x.get_d(); }
std::string to_string(const Rational& x);
std::optional<Rational> exact_sqrt(const Rational& x);

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  QSqrt2(long a) : a_(a) {}                 // NOLINT(implicit)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

int sign(const QSqrt2& x);
inline bool is_zero(const QSqrt2& x) {
  return sgn(x.rational_part()) == 0 && sgn(x.sqrt2_part()) == 0;
}
double to_double(const QSqrt2& x);
std::string to_string(const QSqrt2& x);
QSqrt2 parse_qsqrt2(std::string_view text);
/// Square root inside Q(sqrt 2); only rational radicands are attempted.
std::optional<QSqrt2> exact_sqrt(const QSqrt2& x);
std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

template <class F>
F abs_value(const F& x) {
  return sign(x) < 0 ? F(-x) : x;
}

/// Parses a scalar of field F from text ("p/q" or "p/q+r/s*sqrt2").
template <class F>
F parse_scalar(std::string_view text);
template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}
template <>
inline QSqrt2 parse_scalar<QSqrt2>(std::string_view text) {
  return parse_qsqrt2(text);
}

template <class F>
constexpr const char* field_name();
template <>
constexpr const char* field_name<Rational>() {
  return "Q";
}
template <>
constexpr const char* field_name<QSqrt2>() {
  return "Q(sqrt2)";
}

}  // namespace kundt
