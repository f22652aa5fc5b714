// Elements of the fraction field Q(q,t), compared by cross-multiplication.
#pragma once

#include <optional>
#include <string>

#include "hookbox/intpoly.hpp"
#include "hookbox/partition.hpp"

namespace hookbox {

/// A substitution or limit hit a vanishing denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// num / den with den ≠ 0. No reduced form is maintained; equality is
/// n1·d2 = n2·d1.
class QTFraction {
 public:
  QTFraction() : num_(0), den_(1) {}
  QTFraction(IntPoly num);  // NOLINT(google-explicit-constructor)
  QTFraction(IntPoly num, IntPoly den);
  static QTFraction from_rational(const Rational& r);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QTFraction operator-() const { return {-num_, den_}; }
  friend QTFraction operator+(const QTFraction& a, const QTFraction& b);
  friend QTFraction operator-(const QTFraction& a, const QTFraction& b);
  friend QTFraction operator*(const QTFraction& a, const QTFraction& b);
  friend QTFraction operator/(const QTFraction& a, const QTFraction& b);
  friend bool operator==(const QTFraction& a, const QTFraction& b);

  /// The value as a rational number when neither q nor t occurs.
  std::optional<Rational> as_rational() const;
  /// Exact point evaluation; throws PoleError if the denominator vanishes.
  Rational evaluate(const Rational& q, const Rational& t) const;
  std::string to_string() const;

 private:
  IntPoly num_;
  IntPoly den_;
};

/// f.num·g.den = g.num·f.den, fully expanded.
bool frac_eq(const QTFraction& f, const QTFraction& g);

QTFraction frac_subst(const QTFraction& f, const SubstTarget& q_to,
                      const SubstTarget& t_to);

/// Limit as v -> value for value in {0, 1}. At 1 the factors (1 − v) are
/// stripped from numerator and denominator, at 0 the powers of v. Throws
/// PoleError when the denominator vanishes to higher order.
QTFraction limit_at(const QTFraction& f, Var v, int value);

/// lim_{t->1} f. The result no longer involves t.
inline QTFraction limit_t1(const QTFraction& f) {
  return limit_at(f, Var::t, 1);
}

}  // namespace hookbox
