#include "hookbox/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hookbox/partition.hpp"

namespace hookbox {

namespace {

// Dense accumulation is used for products whose exponent box stays below
// this many cells.
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

Monomial mono_mul(Monomial a, Monomial b) { return {a.q + b.q, a.t + b.t}; }

Monomial mono_pow(Monomial m, std::uint32_t e) { return {m.q * e, m.t * e}; }

std::string mono_string(Monomial m) {
  std::string out;
  auto var = [&out](const char* name, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  var("q", m.q);
  var("t", m.t);
  return out;
}

}  // namespace

IntPoly::IntPoly(long constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, Integer(constant));
}

IntPoly::IntPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

IntPoly IntPoly::monomial(Monomial m, const Integer& coeff) {
  IntPoly p;
  if (coeff != 0) p.terms_.emplace_back(m, coeff);
  return p;
}

IntPoly IntPoly::one_minus(std::uint32_t a, std::uint32_t b) {
  IntPoly p = 1;
  p -= monomial({a, b});
  return p;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  IntPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void IntPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(term));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool IntPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().first == Monomial{});
}

Integer IntPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& term, const Monomial& key) { return term.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::uint32_t IntPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::q ? m.q : m.t);
  return d;
}

Monomial IntPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().first;
  for (const auto& [m, c] : terms_) {
    g.q = std::min(g.q, m.q);
    g.t = std::min(g.t, m.t);
  }
  return g;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Integer sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) { return *this += -other; }

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= scalar;
  }
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_.front().first == Monomial{}) {
    return b * a.terms_.front().second;
  }
  if (b.size() == 1 && b.terms_.front().first == Monomial{}) {
    return a * b.terms_.front().second;
  }
  const std::size_t dq = a.degree(Var::q) + b.degree(Var::q) + 1;
  const std::size_t dt = a.degree(Var::t) + b.degree(Var::t) + 1;
  IntPoly out;
  if (dq * dt <= kDenseLimit && dq * dt <= 64 * a.size() * b.size()) {
    std::vector<Integer> dense(dq * dt);
    std::vector<char> touched(dq * dt, 0);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const std::size_t idx = (ma.q + mb.q) * dt + (ma.t + mb.t);
        mpz_addmul(dense[idx].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        touched[idx] = 1;
      }
    }
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      if (touched[idx] && dense[idx] != 0) {
        out.terms_.emplace_back(
            Monomial{static_cast<std::uint32_t>(idx / dt),
                     static_cast<std::uint32_t>(idx % dt)},
            std::move(dense[idx]));
      }
    }
    return out;
  }
  std::map<Monomial, Integer> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Integer& slot = acc[mono_mul(ma, mb)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  }
  return out;
}

IntPoly IntPoly::shifted(Monomial m) const {
  IntPoly out = *this;
  for (auto& term : out.terms_) term.first = mono_mul(term.first, m);
  return out;
}

IntPoly IntPoly::divided_by_scalar(const Integer& s) const {
  IntPoly out = *this;
  for (auto& term : out.terms_) {
    mpz_divexact(term.second.get_mpz_t(), term.second.get_mpz_t(),
                 s.get_mpz_t());
  }
  return out;
}

IntPoly IntPoly::divided_by_monomial(Monomial m) const {
  IntPoly out = *this;
  for (auto& term : out.terms_) {
    term.first.q -= m.q;
    term.first.t -= m.t;
  }
  return out;
}

Rational IntPoly::evaluate(const Rational& q, const Rational& t) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::uint32_t k = 0; k < m.q; ++k) value *= q;
    for (std::uint32_t k = 0; k < m.t; ++k) value *= t;
    total += value;
  }
  return total;
}

double IntPoly::evaluate(double q, double t) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    total += c.get_d() * std::pow(q, m.q) * std::pow(t, m.t);
  }
  return total;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = mono_string(m);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return IntPoly{};
  const auto& [lead_m, lead_c] = d.leading();
  std::map<Monomial, Integer> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  std::vector<IntPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial m = top->first;
    if (!lead_m.divides(m)) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) {
      return std::nullopt;
    }
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    const Monomial qm{m.q - lead_m.q, m.t - lead_m.t};
    for (const auto& [dm, dc] : d.terms()) {
      const Monomial target{dm.q + qm.q, dm.t + qm.t};
      auto [it, inserted] = rem.try_emplace(target, 0);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), dc.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return IntPoly::from_terms(std::move(quotient));
}

IntPoly product_of_binomials(const std::vector<Monomial>& exponents) {
  IntPoly out = 1;
  for (Monomial m : exponents) {
    out = out - out.shifted(m);
  }
  return out;
}

IntPoly substitute(const IntPoly& p, const SubstTarget& q_to,
                   const SubstTarget& t_to) {
  std::vector<IntPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Integer coeff = c;
    Monomial mono{};
    auto apply = [&](const SubstTarget& target, std::uint32_t e, bool is_q) {
      std::visit(
          [&](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, KeepVar>) {
              if (is_q) {
                mono.q += e;
              } else {
                mono.t += e;
              }
            } else if constexpr (std::is_same_v<T, Integer>) {
              Integer power;
              mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e);
              coeff *= power;
            } else {
              mono = mono_mul(mono, mono_pow(value, e));
            }
          },
          target);
    };
    apply(q_to, m.q, true);
    apply(t_to, m.t, false);
    if (coeff != 0) terms.emplace_back(mono, std::move(coeff));
  }
  return IntPoly::from_terms(std::move(terms));
}

VanishOrder vanish_order_at_one(const IntPoly& p, Var v) {
  if (p.is_zero()) {
    throw DomainError("vanishing order of the zero polynomial is undefined");
  }
  const IntPoly factor =
      v == Var::t ? IntPoly::one_minus(0, 1) : IntPoly::one_minus(1, 0);
  VanishOrder result{0, p};
  while (auto next = divide_exact(result.reduced, factor)) {
    result.reduced = std::move(*next);
    ++result.order;
  }
  return result;
}

}  // namespace hookbox
