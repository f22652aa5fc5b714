// Formal products and quotients of factors (1 − q^a t^b).
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hookbox/fraction.hpp"

namespace hookbox {

/// The factor 1 − q^a t^b; (a, b) = (0, 0) is rejected.
struct QTFactor {
  std::uint32_t a = 0;
  std::uint32_t b = 1;

  QTFactor() = default;
  QTFactor(std::uint32_t q_exp, std::uint32_t t_exp);

  IntPoly poly() const { return IntPoly::one_minus(a, b); }
  /// "1-q^2t^5".
  std::string to_string() const;

  friend bool operator==(const QTFactor&, const QTFactor&) = default;
  friend auto operator<=>(const QTFactor&, const QTFactor&) = default;
};

class FactorMultiset {
 public:
  FactorMultiset() = default;
  FactorMultiset(std::initializer_list<QTFactor> factors);

  void add(QTFactor f, std::size_t count = 1);
  /// Removes up to count copies; returns how many were removed.
  std::size_t remove(QTFactor f, std::size_t count = 1);
  std::size_t count(QTFactor f) const;
  std::size_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<QTFactor, std::size_t>& items() const { return items_; }
  /// Sorted, with repetitions.
  std::vector<QTFactor> elements() const;

  FactorMultiset& operator+=(const FactorMultiset& other);
  friend bool operator==(const FactorMultiset&,
                         const FactorMultiset&) = default;

 private:
  std::map<QTFactor, std::size_t> items_;
  std::size_t total_ = 0;
};

struct FactorBag {
  FactorMultiset num;
  FactorMultiset den;

  friend bool operator==(const FactorBag&, const FactorBag&) = default;
  std::string to_string() const;
};

FactorBag bag_mul(const FactorBag& x, const FactorBag& y);
FactorBag bag_div(const FactorBag& x, const FactorBag& y);
/// Removes common factors pairwise until numerator and denominator are
/// disjoint.
FactorBag bag_cancel(const FactorBag& x);
QTFraction bag_expand(const FactorBag& x);
/// Factor-wise q -> t: (a, b) becomes (0, a + b).
FactorBag bag_subst_q_to_t(const FactorBag& x);
/// Factor-wise t -> 1 limit of a q-free bag: the product of b_num / b_den
/// over paired factors. Throws PoleError when the denominator has more
/// factors, returns 0 when the numerator has more.
Rational bag_limit_t1(const FactorBag& x);

}  // namespace hookbox
