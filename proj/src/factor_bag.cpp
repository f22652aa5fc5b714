#include "hookbox/factor_bag.hpp"

#include <algorithm>

namespace hookbox {

QTFactor::QTFactor(std::uint32_t q_exp, std::uint32_t t_exp)
    : a(q_exp), b(t_exp) {
  if (a == 0 && b == 0) {
    throw DomainError("factor 1 - q^0 t^0 is identically zero");
  }
}

std::string QTFactor::to_string() const {
  return "1-q^" + std::to_string(a) + "t^" + std::to_string(b);
}

FactorMultiset::FactorMultiset(std::initializer_list<QTFactor> factors) {
  for (const auto& f : factors) add(f);
}

void FactorMultiset::add(QTFactor f, std::size_t count) {
  if (count == 0) return;
  items_[f] += count;
  total_ += count;
}

std::size_t FactorMultiset::remove(QTFactor f, std::size_t count) {
  auto it = items_.find(f);
  if (it == items_.end()) return 0;
  const std::size_t removed = std::min(count, it->second);
  it->second -= removed;
  total_ -= removed;
  if (it->second == 0) items_.erase(it);
  return removed;
}

std::size_t FactorMultiset::count(QTFactor f) const {
  auto it = items_.find(f);
  return it == items_.end() ? 0 : it->second;
}

std::vector<QTFactor> FactorMultiset::elements() const {
  std::vector<QTFactor> out;
  out.reserve(total_);
  for (const auto& [f, c] : items_) out.insert(out.end(), c, f);
  return out;
}

FactorMultiset& FactorMultiset::operator+=(const FactorMultiset& other) {
  for (const auto& [f, c] : other.items_) add(f, c);
  return *this;
}

std::string FactorBag::to_string() const {
  auto side = [](const FactorMultiset& m) {
    if (m.empty()) return std::string("1");
    std::string out;
    for (const auto& f : m.elements()) out += "(" + f.to_string() + ")";
    return out;
  };
  return side(num) + " / " + side(den);
}

FactorBag bag_mul(const FactorBag& x, const FactorBag& y) {
  FactorBag out = x;
  out.num += y.num;
  out.den += y.den;
  return out;
}

FactorBag bag_div(const FactorBag& x, const FactorBag& y) {
  FactorBag out = x;
  out.num += y.den;
  out.den += y.num;
  return out;
}

FactorBag bag_cancel(const FactorBag& x) {
  FactorBag out = x;
  for (const auto& [f, c] : x.num.items()) {
    const std::size_t common = std::min(c, x.den.count(f));
    out.num.remove(f, common);
    out.den.remove(f, common);
  }
  return out;
}

QTFraction bag_expand(const FactorBag& x) {
  auto expand = [](const FactorMultiset& m) {
    std::vector<Monomial> exps;
    for (const auto& f : m.elements()) exps.push_back({f.a, f.b});
    return product_of_binomials(exps);
  };
  return {expand(x.num), expand(x.den)};
}

FactorBag bag_subst_q_to_t(const FactorBag& x) {
  FactorBag out;
  for (const auto& [f, c] : x.num.items()) out.num.add({0, f.a + f.b}, c);
  for (const auto& [f, c] : x.den.items()) out.den.add({0, f.a + f.b}, c);
  return out;
}

Rational bag_limit_t1(const FactorBag& x) {
  auto check_q_free = [](const FactorMultiset& m) {
    for (const auto& [f, c] : m.items()) {
      if (f.a != 0) {
        throw DomainError("factor-wise t->1 limit needs a q-free bag");
      }
    }
  };
  check_q_free(x.num);
  check_q_free(x.den);
  if (x.num.total() < x.den.total()) {
    throw PoleError("t->1 limit has a pole: more denominator factors");
  }
  if (x.num.total() > x.den.total()) return 0;
  const auto nums = x.num.elements();
  const auto dens = x.den.elements();
  Rational value = 1;
  for (std::size_t k = 0; k < nums.size(); ++k) {
    const QTFraction pair(nums[k].poly(), dens[k].poly());
    value *= *limit_t1(pair).as_rational();
  }
  return value;
}

}  // namespace hookbox
