#include <doctest.h>

#include <cmath>
#include <random>

#include "hookbox/factor_bag.hpp"
#include "hookbox/factored.hpp"

using namespace hookbox;

namespace {

const IntPoly q = IntPoly::q_var();
const IntPoly t = IntPoly::t_var();

IntPoly pow(const IntPoly& p, int k) {
  IntPoly out(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

IntPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  IntPoly p;
  const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int k = 0; k < terms; ++k) {
    p += IntPoly::monomial(
        {static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng))},
        coeff(rng));
  }
  return p;
}

FactorBag random_bag(std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> exp(0, 3);
  FactorBag bag;
  const int factors = std::uniform_int_distribution<int>(0, 6)(rng);
  for (int k = 0; k < factors; ++k) {
    std::uint32_t a = exp(rng);
    std::uint32_t b = exp(rng);
    if (a == 0 && b == 0) b = 1;
    (k % 2 ? bag.num : bag.den).add({a, b});
  }
  return bag;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK((1 - t) * (1 + t) == 1 - t * t);
  CHECK(IntPoly::one_minus(0, 1) * IntPoly(1) == 1 - t);
  CHECK((q * t) == (t * q));
  CHECK((t - t).is_zero());
  CHECK((t - t).terms().empty());
  CHECK((1 - 2 * t + t * t).to_string() == "1 - 2*t + t^2");
  CHECK(IntPoly::one_minus(2, 5).to_string() == "1 - q^2*t^5");
  CHECK(pow(1 + q, 3).coeff({2, 0}) == 3);
  CHECK(divide_exact(1 - pow(t, 3), 1 - t) == std::optional(1 + t + t * t));
  CHECK_FALSE(divide_exact(1 + t, 1 - t).has_value());
  CHECK(product_of_binomials({{0, 1}, {0, 1}}) == 1 - 2 * t + t * t);
}

TEST_CASE("big coefficients stay exact") {
  const IntPoly p = pow(1 + q + t, 60);
  Integer expected;
  mpz_bin_uiui(expected.get_mpz_t(), 60, 30);
  CHECK(p.coeff({30, 0}) == expected);
  Integer three_to_60;
  mpz_ui_pow_ui(three_to_60.get_mpz_t(), 3, 60);
  CHECK(p.evaluate(Rational(1), Rational(1)) == Rational(three_to_60));
}

TEST_CASE("substitution") {
  CHECK(substitute(1 - q * t * t, Monomial{0, 1}, KeepVar{}) == 1 - pow(t, 3));
  CHECK(substitute(IntPoly::one_minus(2, 5), Integer(1), KeepVar{}) ==
        1 - pow(t, 5));
  CHECK(substitute(1 - q, KeepVar{}, Integer(0)) == 1 - q);
  CHECK(substitute(q + t, Monomial{0, 2}, Monomial{1, 0}) == t * t + q);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(11);
  const std::vector<std::pair<SubstTarget, SubstTarget>> sigmas{
      {Monomial{0, 1}, KeepVar{}},   {Integer(1), KeepVar{}},
      {KeepVar{}, Integer(1)},       {Integer(0), KeepVar{}},
      {KeepVar{}, Integer(0)},       {Monomial{0, 2}, Monomial{1, 0}},
      {Integer(-2), Integer(3)}};
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly p = random_poly(rng);
    const IntPoly r = random_poly(rng);
    for (const auto& [qs, ts] : sigmas) {
      CHECK(substitute(p * r, qs, ts) == substitute(p, qs, ts) * substitute(r, qs, ts));
      CHECK(substitute(p + r, qs, ts) == substitute(p, qs, ts) + substitute(r, qs, ts));
    }
  }
}

TEST_CASE("vanishing order at t = 1") {
  VanishOrder v = vanish_order_t1(1 - t * t);
  CHECK(v.order == 1);
  CHECK(v.reduced == 1 + t);
  v = vanish_order_t1(1 - q * t);
  CHECK(v.order == 0);
  CHECK(v.reduced == 1 - q * t);
  v = vanish_order_t1(pow(1 - t, 2) * (1 + q));
  CHECK(v.order == 2);
  CHECK(v.reduced == 1 + q);
  CHECK_THROWS_AS(vanish_order_t1(IntPoly()), DomainError);
}

TEST_CASE("limits at t = 1") {
  for (int k = 1; k <= 20; ++k) {
    const QTFraction f(1 - pow(t, k), 1 - t);
    CHECK(limit_t1(f) == QTFraction(IntPoly(k)));
    // Smoke check only: the float evaluation just above 1.
    const double x = 1 + 1e-6;
    const double approx = (1 - std::pow(x, k)) / (1 - x);
    CHECK(std::abs(approx - k) / k < 1e-4);
  }
  CHECK(limit_t1(QTFraction(1 - t * t, 1 - t * t)) == QTFraction(IntPoly(1)));
  CHECK(limit_t1(QTFraction(1 - pow(t, 5), 1 - t)) == QTFraction(IntPoly(5)));
  CHECK(limit_t1(QTFraction((1 + q) * (1 - t), 1 - q * t)) == QTFraction(IntPoly()));
  CHECK_THROWS_AS(limit_t1(QTFraction(IntPoly(1), 1 - t)), PoleError);
  CHECK(limit_at(QTFraction(q * (1 + t), q * q + q), Var::q, 0) ==
        QTFraction(1 + t));
}

TEST_CASE("fractions compare by cross-multiplication") {
  CHECK(frac_eq(QTFraction(1 - t * t, 1 - t), QTFraction(1 + t)));
  CHECK(frac_eq(QTFraction(1 - q * t), QTFraction(1 - t * q)));
  CHECK_FALSE(frac_eq(QTFraction(1 + t), QTFraction(1 + q)));
  CHECK_THROWS_AS(QTFraction(IntPoly(1), IntPoly()), PoleError);
  CHECK(QTFraction(IntPoly(), 1 - t) == QTFraction(IntPoly()));
  const QTFraction half = QTFraction::from_rational(Rational(1, 2));
  CHECK(half + half == QTFraction(IntPoly(1)));
  CHECK((QTFraction(1 + t) / QTFraction(1 - t * t)) * (1 - t) == QTFraction(IntPoly(1)));
  CHECK(QTFraction(1 - t * t, 1 - t).evaluate(Rational(0), Rational(3)) == Rational(4));
}

TEST_CASE("frac_eq is an equivalence relation") {
  std::mt19937 rng(3);
  std::vector<QTFraction> fs;
  for (int k = 0; k < 30; ++k) {
    const IntPoly scale = 1 + random_poly(rng) * q;
    IntPoly den = random_poly(rng);
    if (den.is_zero()) den = 1 - t;
    const IntPoly num = random_poly(rng);
    fs.emplace_back(num, den);
    fs.emplace_back(num * scale, den * scale);
  }
  for (const auto& f : fs) CHECK(frac_eq(f, f));
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      CHECK(frac_eq(f, g) == frac_eq(g, f));
      if (!frac_eq(f, g)) continue;
      for (const auto& h : fs) {
        if (frac_eq(g, h)) CHECK(frac_eq(f, h));
      }
    }
  }
  for (std::size_t k = 0; k + 1 < fs.size(); k += 2) CHECK(frac_eq(fs[k], fs[k + 1]));
}

TEST_CASE("factor bags") {
  const FactorBag telescoped{{{0, 5}, {0, 4}}, {{0, 4}, {0, 1}}};
  const FactorBag cancelled = bag_cancel(telescoped);
  CHECK(cancelled.num == FactorMultiset{{0, 5}});
  CHECK(cancelled.den == FactorMultiset{{0, 1}});

  const FactorBag x{{{1, 2}, {0, 3}}, {{2, 2}}};
  const FactorBag self = bag_cancel(bag_div(x, x));
  CHECK(self.num.empty());
  CHECK(self.den.empty());
  CHECK(bag_expand(FactorBag{}) == QTFraction(IntPoly(1)));
  CHECK(bag_expand(FactorBag{}).num() == IntPoly(1));
  CHECK(bag_expand(FactorBag{}).den() == IntPoly(1));

  const QTFraction squared = bag_expand(FactorBag{{{0, 1}, {0, 1}}, {}});
  CHECK(squared.num() == 1 - 2 * t + t * t);
  CHECK(bag_expand(FactorBag{{{1, 1}}, {}}).num() == 1 - q * t);
  CHECK(bag_expand(FactorBag{{{0, 2}}, {{0, 1}}}) == QTFraction(1 + t));

  CHECK_THROWS(QTFactor(0, 0));
  CHECK(QTFactor(2, 5).to_string() == "1-q^2t^5");
  CHECK(bag_mul(x, x).num.total() == 4);
  CHECK(bag_subst_q_to_t(FactorBag{{{1, 2}}, {{2, 0}}}) ==
        FactorBag{{{0, 3}}, {{0, 2}}});
  CHECK(bag_limit_t1(FactorBag{{{0, 5}, {0, 6}}, {{0, 1}, {0, 2}}}) == Rational(15));
  CHECK_THROWS_AS(bag_limit_t1(FactorBag{{}, {{0, 1}}}), PoleError);
  CHECK(bag_limit_t1(FactorBag{{{0, 1}}, {}}) == 0);
}

TEST_CASE("cancellation never changes the rational function") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const FactorBag bag = random_bag(rng);
    const FactorBag cancelled = bag_cancel(bag);
    CHECK(frac_eq(bag_expand(bag), bag_expand(cancelled)));
    for (const auto& [f, count] : cancelled.num.items()) {
      CHECK(cancelled.den.count(f) == 0);
      (void)count;
    }
  }
}

TEST_CASE("cyclotomic atoms") {
  CHECK(cyclotomic(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (std::uint32_t a = 0; a <= 4; ++a) {
    for (std::uint32_t b = 0; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      const AtomFactorization f = binomial_atoms(a, b);
      IntPoly product(f.unit);
      for (const auto& [atom, mult] : f.atoms) {
        for (std::uint32_t k = 0; k < mult; ++k) product = product * atom.poly();
      }
      CHECK(product == IntPoly::one_minus(a, b));
      CHECK(factor_over_atoms(IntPoly::one_minus(a, b)).has_value());
    }
  }
  CHECK_FALSE(factor_over_atoms(1 + q + t).has_value());
  const auto split = factor_over_atoms(3 * q * t * (1 - t * t) * (1 + q * t));
  REQUIRE(split.has_value());
  // 1 - t^2 = -Φ1(t)Φ2(t) with Φ1(t) = t - 1.
  CHECK(split->unit == -3);
}

TEST_CASE("factored fractions stay equal to their expansions") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const FactorBag a = random_bag(rng);
    const FactorBag b = random_bag(rng);
    const FactoredFraction fa = FactoredFraction::from_fraction(bag_expand(a));
    const FactoredFraction fb = FactoredFraction::from_fraction(bag_expand(b));
    CHECK(frac_eq((fa + fb).to_fraction(), bag_expand(a) + bag_expand(b)));
    CHECK(frac_eq((fa - fb).to_fraction(), bag_expand(a) - bag_expand(b)));
    CHECK(frac_eq((fa * fb).to_fraction(), bag_expand(a) * bag_expand(b)));
    if (!fb.is_zero()) {
      CHECK(frac_eq((fa / fb).to_fraction(), bag_expand(a) / bag_expand(b)));
    }
  }
  const FactoredFraction sum =
      FactoredFraction::over_binomials(IntPoly(1), {{0, 1}}) +
      FactoredFraction::over_binomials(-t, {{0, 1}});
  CHECK(sum == FactoredFraction(IntPoly(1)));
  CHECK(sum.den_atoms().empty());
}
