#include "lf/exact.hpp"

#include <stdexcept>

namespace lf {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view digits) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    for (char c : body) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::string s(digits);
    if (s.front() == '+') s.erase(0, 1);
    return BigInt(s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }
Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }
Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}
std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  int c = cmp(x.value_, y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

void check_radicand(int m) {
  if (m < 1 || m > 3) throw std::invalid_argument("radicand must be 1, 2 or 3, got " + std::to_string(m));
}

void check_same(const QuadNum& x, const QuadNum& y) {
  if (x.radicand() != y.radicand()) {
    throw std::invalid_argument("radicand mismatch: Q(√" + std::to_string(x.radicand()) + ") vs Q(√" +
                                std::to_string(y.radicand()) + ")");
  }
}

}  // namespace

QuadNum::QuadNum(int radicand) : m_(radicand) { check_radicand(radicand); }

QuadNum::QuadNum(int radicand, Rational rat, Rational rad) : m_(radicand), rat_(std::move(rat)), rad_(std::move(rad)) {
  check_radicand(radicand);
  if (m_ == 1) {
    rat_ = rat_ + rad_;
    rad_ = Rational();
  }
}

QuadNum QuadNum::integer(int radicand, const BigInt& value) { return QuadNum(radicand, Rational(value), Rational()); }

QuadNum QuadNum::radical(int radicand, const BigInt& value) { return QuadNum(radicand, Rational(), Rational(value)); }

Sign QuadNum::sign() const {
  int a = rat_.sign();
  int b = rad_.sign();
  int s;
  if (b == 0) {
    s = a;
  } else if (a == 0 || a == b) {
    s = b;
  } else {
    // Mixed signs: the larger of a^2 and b^2 m wins.
    auto lhs = rat_ * rat_;
    auto rhs = rad_ * rad_ * Rational(m_);
    auto c = lhs <=> rhs;
    s = c > 0 ? a : (c < 0 ? b : 0);
  }
  return static_cast<Sign>(s);
}

std::optional<BigInt> QuadNum::as_integer() const {
  if (!rad_.is_zero() || !rat_.is_integer()) return std::nullopt;
  return rat_.numerator();
}

std::optional<BigInt> QuadNum::as_radical_multiple() const {
  if (!rat_.is_zero() || !rad_.is_integer()) return std::nullopt;
  return rad_.numerator();
}

Rational QuadNum::norm() const { return rat_ * rat_ - rad_ * rad_ * Rational(m_); }

std::string QuadNum::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!rat_.is_zero()) out = rat_.to_string();
  if (!rad_.is_zero()) {
    const std::string root = "√" + std::to_string(m_);
    BigInt num = rad_.numerator();
    BigInt den = rad_.denominator();
    if (num < 0) {
      out += "-";
      num = -num;
    } else if (!out.empty()) {
      out += "+";
    }
    if (num != 1) out += num.get_str(10);
    out += root;
    if (den != 1) out += "/" + den.get_str(10);
  }
  return out;
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  check_same(x, y);
  return QuadNum(x.m_, x.rat_ + y.rat_, x.rad_ + y.rad_);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  check_same(x, y);
  return QuadNum(x.m_, x.rat_ - y.rat_, x.rad_ - y.rad_);
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  check_same(x, y);
  Rational m(x.m_);
  return QuadNum(x.m_, x.rat_ * y.rat_ + x.rad_ * y.rad_ * m, x.rat_ * y.rad_ + x.rad_ * y.rat_);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
  check_same(x, y);
  if (y.is_zero()) throw std::domain_error("division by zero in Q(√" + std::to_string(y.m_) + ")");
  // x * conj(y) / (c^2 - d^2 m); the norm is nonzero for y != 0 when m is not a square.
  Rational n = y.norm();
  QuadNum top = x * y.conjugate();
  return QuadNum(x.m_, top.rat_ / n, top.rad_ / n);
}

QuadNum add(const QuadNum& x, const QuadNum& y) { return x + y; }
QuadNum mul(const QuadNum& x, const QuadNum& y) { return x * y; }
QuadNum div(const QuadNum& x, const QuadNum& y) { return x / y; }

}  // namespace lf
