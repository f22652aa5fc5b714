#include "hookbox/fraction.hpp"

#include <algorithm>

namespace hookbox {

QTFraction::QTFraction(IntPoly num) : num_(std::move(num)), den_(1) {}

QTFraction::QTFraction(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("fraction with zero denominator");
}

QTFraction QTFraction::from_rational(const Rational& r) {
  return {IntPoly(r.get_num()), IntPoly(r.get_den())};
}

QTFraction operator+(const QTFraction& a, const QTFraction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

QTFraction operator-(const QTFraction& a, const QTFraction& b) {
  return a + (-b);
}

QTFraction operator*(const QTFraction& a, const QTFraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

QTFraction operator/(const QTFraction& a, const QTFraction& b) {
  if (b.is_zero()) throw PoleError("division by a zero fraction");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const QTFraction& a, const QTFraction& b) {
  return frac_eq(a, b);
}

bool frac_eq(const QTFraction& f, const QTFraction& g) {
  if (f.num().is_zero() || g.num().is_zero()) {
    return f.num().is_zero() && g.num().is_zero();
  }
  return f.num() * g.den() == g.num() * f.den();
}

std::optional<Rational> QTFraction::as_rational() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  Rational r(num_.coeff({}), den_.coeff({}));
  r.canonicalize();
  return r;
}

Rational QTFraction::evaluate(const Rational& q, const Rational& t) const {
  const Rational d = den_.evaluate(q, t);
  if (d == 0) throw PoleError("denominator vanishes at evaluation point");
  return num_.evaluate(q, t) / d;
}

std::string QTFraction::to_string() const {
  if (den_ == IntPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QTFraction frac_subst(const QTFraction& f, const SubstTarget& q_to,
                      const SubstTarget& t_to) {
  IntPoly den = substitute(f.den(), q_to, t_to);
  if (den.is_zero()) {
    throw PoleError("denominator " + f.den().to_string() +
                    " vanishes under substitution");
  }
  return {substitute(f.num(), q_to, t_to), std::move(den)};
}

QTFraction limit_at(const QTFraction& f, Var v, int value) {
  if (value != 0 && value != 1) {
    throw DomainError("limits are supported at 0 and 1 only");
  }
  const SubstTarget keep = KeepVar{};
  const SubstTarget point = Integer(value);
  const SubstTarget& q_to = v == Var::q ? point : keep;
  const SubstTarget& t_to = v == Var::t ? point : keep;
  if (f.is_zero()) return QTFraction{};

  IntPoly num;
  IntPoly den;
  if (value == 1) {
    VanishOrder n = vanish_order_at_one(f.num(), v);
    VanishOrder d = vanish_order_at_one(f.den(), v);
    if (n.order < d.order) {
      throw PoleError("limit has a pole: numerator vanishes to order " +
                      std::to_string(n.order) + ", denominator to order " +
                      std::to_string(d.order));
    }
    if (n.order > d.order) return QTFraction{};
    num = std::move(n.reduced);
    den = std::move(d.reduced);
  } else {
    const Monomial cn = f.num().monomial_content();
    const Monomial cd = f.den().monomial_content();
    const std::uint32_t on = v == Var::q ? cn.q : cn.t;
    const std::uint32_t od = v == Var::q ? cd.q : cd.t;
    if (on < od) {
      throw PoleError("limit at 0 has a pole of order " +
                      std::to_string(od - on));
    }
    if (on > od) return QTFraction{};
    const Monomial strip = v == Var::q ? Monomial{on, 0} : Monomial{0, on};
    num = f.num().divided_by_monomial(strip);
    den = f.den().divided_by_monomial(strip);
  }
  return frac_subst(QTFraction(std::move(num), std::move(den)), q_to, t_to);
}

}  // namespace hookbox
