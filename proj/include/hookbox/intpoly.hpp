// Sparse polynomials in Z[q,t] with arbitrary-precision coefficients.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hookbox {

using Integer = mpz_class;
using Rational = mpq_class;

/// q^q t^t.
struct Monomial {
  std::uint32_t q = 0;
  std::uint32_t t = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  bool divides(const Monomial& other) const {
    return q <= other.q && t <= other.t;
  }
};

enum class Var { q, t };

/// Canonical sparse polynomial: terms sorted lexicographically on (q, t)
/// exponents, no zero coefficients. The zero polynomial has no terms.
class IntPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  IntPoly() = default;
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(const Integer& constant);
  static IntPoly monomial(Monomial m, const Integer& coeff = 1);
  static IntPoly q_var() { return monomial({1, 0}); }
  static IntPoly t_var() { return monomial({0, 1}); }
  /// 1 − q^a t^b.
  static IntPoly one_minus(std::uint32_t a, std::uint32_t b);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static IntPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Integer coeff(Monomial m) const;
  /// Lexicographically largest term; requires non-zero.
  const Term& leading() const { return terms_.back(); }
  std::uint32_t degree(Var v) const;
  /// Largest monomial dividing every term (zero polynomial -> 1).
  Monomial monomial_content() const;
  /// gcd of the integer coefficients (0 for the zero polynomial).
  Integer content() const;
  bool involves(Var v) const { return degree(v) > 0; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies by the monomial m.
  IntPoly shifted(Monomial m) const;
  /// Divides every coefficient by s; s must divide each exactly.
  IntPoly divided_by_scalar(const Integer& s) const;
  /// Divides by the monomial m; m must divide every term.
  IntPoly divided_by_monomial(Monomial m) const;

  Rational evaluate(const Rational& q, const Rational& t) const;
  double evaluate(double q, double t) const;

  /// Human-readable form, e.g. "1 - 2*t + t^2" or "1 - q*t^2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Quotient p / d when d divides p exactly in Z[q,t], nullopt otherwise.
/// d must be non-zero.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d);

/// Product of (1 − q^a t^b) over the listed exponent pairs.
IntPoly product_of_binomials(const std::vector<Monomial>& exponents);

/// Replacement for one variable under poly_subst.
struct KeepVar {};
using SubstTarget = std::variant<KeepVar, Integer, Monomial>;

/// Simultaneous substitution q -> q_to, t -> t_to.
IntPoly substitute(const IntPoly& p, const SubstTarget& q_to,
                   const SubstTarget& t_to);

struct VanishOrder {
  unsigned order = 0;
  IntPoly reduced;
};

/// p = (1 − v)^order · reduced with reduced|_{v=1} ≠ 0 (as a polynomial in
/// the other variable). Throws DomainError for p = 0.
VanishOrder vanish_order_at_one(const IntPoly& p, Var v);
inline VanishOrder vanish_order_t1(const IntPoly& p) {
  return vanish_order_at_one(p, Var::t);
}

}  // namespace hookbox
