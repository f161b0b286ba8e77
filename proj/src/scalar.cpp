#include "kundt/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace kundt {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("invalid rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n = sqrt(mpz_class(x.get_num()));
  mpz_class d = sqrt(mpz_class(x.get_den()));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm vanishes only at 0.
  Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(sqrt2)");
  QSqrt2 inv(Rational(o.a_ / norm), Rational(-o.b_ / norm));
  return *this *= inv;
}

int sign(const QSqrt2& x) {
  int sa = sgn(x.rational_part());
  int sb = sgn(x.sqrt2_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 2 b^2.
  Rational a2 = x.rational_part() * x.rational_part();
  Rational b2 = 2 * x.sqrt2_part() * x.sqrt2_part();
  return a2 > b2 ? sa : sb;
}

double to_double(const QSqrt2& x) {
  return x.rational_part().get_d() + x.sqrt2_part().get_d() * std::sqrt(2.0);
}

std::string to_string(const QSqrt2& x) {
  if (x.is_rational()) return x.rational_part().get_str();
  std::string out;
  if (sgn(x.rational_part()) != 0) out = x.rational_part().get_str();
  Rational b = x.sqrt2_part();
  if (!out.empty()) out += sgn(b) < 0 ? "-" : "+";
  else if (sgn(b) < 0) out += "-";
  Rational mag = abs(b);
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt2";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << to_string(x); }

QSqrt2 parse_qsqrt2(std::string_view text) {
  // Sum of signed terms; each term is a rational, "sqrt2", or "<rational>*sqrt2".
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty scalar");
  QSqrt2 total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw InputError("invalid scalar '" + std::string(text) + "'");
    QSqrt2 value;
    auto star = term.find("sqrt2");
    if (star == std::string::npos) {
      value = QSqrt2(parse_rational(term));
    } else {
      if (star + 5 != term.size()) throw InputError("invalid scalar '" + std::string(text) + "'");
      std::string coeff = term.substr(0, star);
      Rational c(1);
      if (!coeff.empty()) {
        if (coeff.back() != '*') throw InputError("invalid scalar '" + std::string(text) + "'");
        coeff.pop_back();
        c = parse_rational(coeff);
      }
      value = QSqrt2(Rational(0), c);
    }
    total += negative ? -value : value;
  }
  return total;
}

std::optional<QSqrt2> exact_sqrt(const QSqrt2& x) {
  if (!x.is_rational()) return std::nullopt;
  if (auto r = exact_sqrt(x.rational_part())) return QSqrt2(*r);
  // sqrt(2 q^2) = q sqrt2
  if (auto r = exact_sqrt(Rational(x.rational_part() / 2))) return QSqrt2(Rational(0), *r);
  return std::nullopt;
}

}  // namespace kundt
