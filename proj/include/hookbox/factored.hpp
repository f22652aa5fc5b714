// Rational functions whose denominators are kept factored into cyclotomic
// atoms Φ_k(q^α t^β). Every binomial 1 − q^a t^b splits into such atoms, so
// sums and products of the fractions met in this library stay reducible by
// exact trial division alone.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hookbox/fraction.hpp"

namespace hookbox {

/// Φ_order(q^alpha t^beta) with gcd(alpha, beta) = 1. Irreducible in Z[q,t].
struct CycloAtom {
  std::uint32_t order = 1;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 1;

  const IntPoly& poly() const;
  friend bool operator==(const CycloAtom&, const CycloAtom&) = default;
  friend auto operator<=>(const CycloAtom&, const CycloAtom&) = default;
};

using AtomMultiset = std::map<CycloAtom, std::uint32_t>;

/// Coefficients of the univariate cyclotomic polynomial Φ_k, low degree
/// first.
const std::vector<long>& cyclotomic(std::uint32_t k);

/// 1 − q^a t^b = sign · Π atoms.
struct AtomFactorization {
  Integer unit = 1;
  Monomial mono{};
  AtomMultiset atoms;
};
AtomFactorization binomial_atoms(std::uint32_t a, std::uint32_t b);

/// p = unit · q^i t^j · Π atoms, or nullopt when p has a factor that is
/// not an atom.
std::optional<AtomFactorization> factor_over_atoms(const IntPoly& p);

class FactoredFraction {
 public:
  FactoredFraction() = default;
  FactoredFraction(IntPoly num);  // NOLINT(google-explicit-constructor)
  explicit FactoredFraction(const Rational& r);
  /// num / Π_k (1 − q^{a_k} t^{b_k}).
  static FactoredFraction over_binomials(IntPoly num,
                                         const std::vector<Monomial>& den);
  /// Requires f's denominator to split into atoms; throws std::logic_error
  /// otherwise.
  static FactoredFraction from_fraction(const QTFraction& f);

  const IntPoly& num() const { return num_; }
  const Integer& scale() const { return scale_; }
  const Monomial& den_monomial() const { return mono_; }
  const AtomMultiset& den_atoms() const { return atoms_; }
  bool is_zero() const { return num_.is_zero(); }

  IntPoly den_poly() const;
  /// Expanded pair, signed so the denominator's lowest term is positive.
  QTFraction to_fraction() const;

  FactoredFraction operator-() const;
  FactoredFraction& operator+=(const FactoredFraction& other);
  FactoredFraction& operator-=(const FactoredFraction& other);
  FactoredFraction& operator*=(const FactoredFraction& other);
  friend FactoredFraction operator+(FactoredFraction a,
                                    const FactoredFraction& b) {
    return a += b;
  }
  friend FactoredFraction operator-(FactoredFraction a,
                                    const FactoredFraction& b) {
    return a -= b;
  }
  friend FactoredFraction operator*(FactoredFraction a,
                                    const FactoredFraction& b) {
    return a *= b;
  }
  /// Needs the divisor's numerator to factor over atoms; throws
  /// std::logic_error otherwise and PoleError for a zero divisor.
  friend FactoredFraction operator/(const FactoredFraction& a,
                                    const FactoredFraction& b);
  /// Exact equality of the represented rational functions.
  friend bool operator==(const FactoredFraction& a, const FactoredFraction& b);

 private:
  void reduce();

  IntPoly num_{0};
  Integer scale_ = 1;
  Monomial mono_{};
  AtomMultiset atoms_;
};

}  // namespace hookbox
