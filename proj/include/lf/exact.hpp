// Exact arithmetic in Q(sqrt(m)) for m in {1, 2, 3}.
//
// Every frieze entry is a QuadNum. Coefficients are unbounded rationals, so
// the diamond rule can divide without rounding and sweeps never overflow.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace lf {

using BigInt = mpz_class;

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p/q" or "p" (base 10, optional leading '-').
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// a + b*sqrt(m). Values with different radicands never combine: arithmetic
/// on mismatched radicands throws std::invalid_argument.
class QuadNum {
 public:
  /// Zero in Q(sqrt(m)).
  explicit QuadNum(int radicand = 1);
  QuadNum(int radicand, Rational rat, Rational rad);

  static QuadNum integer(int radicand, const BigInt& value);
  /// value * sqrt(m)
  static QuadNum radical(int radicand, const BigInt& value);

  int radicand() const { return m_; }
  const Rational& rat() const { return rat_; }
  const Rational& rad() const { return rad_; }

  Sign sign() const;
  bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
  bool is_positive() const { return sign() == Sign::positive; }

  /// The integer value when rad = 0 and rat is integral.
  std::optional<BigInt> as_integer() const;
  /// b when the value is exactly b*sqrt(m) with b integral. For m = 1 only
  /// zero qualifies, since sqrt(1) is folded into the rational part.
  std::optional<BigInt> as_radical_multiple() const;

  QuadNum conjugate() const { return QuadNum(m_, rat_, -rad_); }
  /// a^2 - b^2 m
  Rational norm() const;

  /// Human rendering: "3√2", "1", "0", "1+√2", "1/2-√3/2".
  std::string to_string() const;

  QuadNum operator-() const { return QuadNum(m_, -rat_, -rad_); }
  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  /// Throws std::domain_error on division by zero.
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y);
  friend bool operator==(const QuadNum& x, const QuadNum& y) = default;

 private:
  int m_;
  Rational rat_;
  Rational rad_;
};

QuadNum add(const QuadNum& x, const QuadNum& y);
QuadNum mul(const QuadNum& x, const QuadNum& y);
QuadNum div(const QuadNum& x, const QuadNum& y);

}  // namespace lf
