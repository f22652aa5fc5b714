#include "hookbox/factored.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hookbox {

namespace {

using Complex = std::complex<double>;

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<long> poly_divide_monic(std::vector<long> num,
                                    const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::uint32_t totient_degree(std::uint32_t k) {
  return static_cast<std::uint32_t>(cyclotomic(k).size() - 1);
}

// p evaluated at a point where Φ_k(q^α t^β) vanishes. A factor of p must
// vanish there too, so a clearly non-zero value rules the atom out.
bool may_contain(const IntPoly& p, const CycloAtom& atom) {
  const Complex root = std::polar(1.0, kTwoPi / atom.order);
  Complex q;
  Complex t;
  if (atom.alpha == 0) {
    t = std::pow(root, 1.0 / atom.beta);
    q = std::polar(1.0, 1.1319);
  } else {
    t = std::polar(1.0, 0.6180339887);
    q = std::pow(root / std::pow(t, static_cast<double>(atom.beta)),
                 1.0 / atom.alpha);
  }
  Complex value = 0;
  double magnitude = 0;
  for (const auto& [m, c] : p.terms()) {
    const double cd = c.get_d();
    value += cd * std::pow(q, static_cast<double>(m.q)) *
             std::pow(t, static_cast<double>(m.t));
    magnitude += std::abs(cd);
  }
  return std::abs(value) <= 1e-7 * magnitude;
}

bool strip_atom(IntPoly& p, const CycloAtom& atom) {
  if (!may_contain(p, atom)) return false;
  auto quotient = divide_exact(p, atom.poly());
  if (!quotient) return false;
  p = std::move(*quotient);
  return true;
}

}  // namespace

const std::vector<long>& cyclotomic(std::uint32_t k) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<long>> cache;
  if (k == 0) throw DomainError("cyclotomic polynomial of order 0");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  std::vector<long> poly(k + 1, 0);
  poly[0] = -1;
  poly[k] = 1;
  for (std::uint32_t d = 1; d < k; ++d) {
    if (k % d == 0) poly = poly_divide_monic(std::move(poly), cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(k, std::move(poly)).first->second;
}

const IntPoly& CycloAtom::poly() const {
  static std::mutex mutex;
  static std::map<CycloAtom, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(*this); it != cache.end()) return it->second;
  }
  const auto& coeffs = cyclotomic(order);
  std::vector<IntPoly::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto e = static_cast<std::uint32_t>(i);
    terms.emplace_back(Monomial{alpha * e, beta * e}, Integer(coeffs[i]));
  }
  IntPoly p = IntPoly::from_terms(std::move(terms));
  std::lock_guard lock(mutex);
  return cache.emplace(*this, std::move(p)).first->second;
}

AtomFactorization binomial_atoms(std::uint32_t a, std::uint32_t b) {
  if (a == 0 && b == 0) throw DomainError("binomial 1 - q^0 t^0 is zero");
  const std::uint32_t g = std::gcd(a, b);
  AtomFactorization out;
  out.unit = -1;
  for (std::uint32_t k = 1; k <= g; ++k) {
    if (g % k == 0) out.atoms[{k, a / g, b / g}] += 1;
  }
  return out;
}

std::optional<AtomFactorization> factor_over_atoms(const IntPoly& p) {
  if (p.is_zero()) return std::nullopt;
  AtomFactorization out;
  out.mono = p.monomial_content();
  IntPoly rest = p.divided_by_monomial(out.mono);
  out.unit = rest.content();
  rest = rest.divided_by_scalar(out.unit);

  const std::uint32_t max_deg =
      std::max(rest.degree(Var::q), rest.degree(Var::t));
  for (std::uint32_t k = 1; !rest.is_constant() && k <= 2 * max_deg * max_deg;
       ++k) {
    const std::uint32_t f = totient_degree(k);
    if (f > max_deg) continue;
    const std::uint32_t max_alpha = rest.degree(Var::q) / f;
    const std::uint32_t max_beta = rest.degree(Var::t) / f;
    for (std::uint32_t alpha = 0; alpha <= max_alpha; ++alpha) {
      for (std::uint32_t beta = 0; beta <= max_beta; ++beta) {
        if (std::gcd(alpha, beta) != 1) continue;
        const CycloAtom atom{k, alpha, beta};
        while (strip_atom(rest, atom)) out.atoms[atom] += 1;
      }
    }
  }
  if (!rest.is_constant()) return std::nullopt;
  out.unit *= rest.coeff({});
  return out;
}

FactoredFraction::FactoredFraction(IntPoly num) : num_(std::move(num)) {}

FactoredFraction::FactoredFraction(const Rational& r)
    : num_(r.get_num()), scale_(r.get_den()) {
  reduce();
}

FactoredFraction FactoredFraction::over_binomials(
    IntPoly num, const std::vector<Monomial>& den) {
  FactoredFraction out(std::move(num));
  for (Monomial m : den) {
    const AtomFactorization f = binomial_atoms(m.q, m.t);
    out.num_ *= f.unit;
    for (const auto& [atom, e] : f.atoms) out.atoms_[atom] += e;
  }
  out.reduce();
  return out;
}

FactoredFraction FactoredFraction::from_fraction(const QTFraction& f) {
  return FactoredFraction(f.num()) / FactoredFraction(f.den());
}

IntPoly FactoredFraction::den_poly() const {
  IntPoly den = IntPoly::monomial(mono_, scale_);
  for (const auto& [atom, e] : atoms_) {
    for (std::uint32_t k = 0; k < e; ++k) den *= atom.poly();
  }
  return den;
}

FactoredFraction FactoredFraction::operator-() const {
  FactoredFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

FactoredFraction& FactoredFraction::operator+=(const FactoredFraction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;

  Integer scale;
  mpz_lcm(scale.get_mpz_t(), scale_.get_mpz_t(), other.scale_.get_mpz_t());
  const Monomial mono{std::max(mono_.q, other.mono_.q),
                      std::max(mono_.t, other.mono_.t)};
  AtomMultiset atoms = atoms_;
  for (const auto& [atom, e] : other.atoms_) {
    atoms[atom] = std::max(atoms[atom], e);
  }
  auto lift = [&](const FactoredFraction& f) {
    IntPoly lifted = f.num_.shifted({mono.q - f.mono_.q, mono.t - f.mono_.t});
    lifted *= Integer(scale / f.scale_);
    for (const auto& [atom, e] : atoms) {
      auto it = f.atoms_.find(atom);
      const std::uint32_t have = it == f.atoms_.end() ? 0 : it->second;
      for (std::uint32_t k = have; k < e; ++k) lifted *= atom.poly();
    }
    return lifted;
  };
  num_ = lift(*this) + lift(other);
  scale_ = std::move(scale);
  mono_ = mono;
  atoms_ = std::move(atoms);
  reduce();
  return *this;
}

FactoredFraction& FactoredFraction::operator-=(const FactoredFraction& other) {
  return *this += -other;
}

FactoredFraction& FactoredFraction::operator*=(const FactoredFraction& other) {
  num_ *= other.num_;
  scale_ *= other.scale_;
  mono_ = {mono_.q + other.mono_.q, mono_.t + other.mono_.t};
  for (const auto& [atom, e] : other.atoms_) atoms_[atom] += e;
  reduce();
  return *this;
}

FactoredFraction operator/(const FactoredFraction& a,
                           const FactoredFraction& b) {
  if (b.is_zero()) throw PoleError("division by zero");
  auto factored = factor_over_atoms(b.num_);
  if (!factored) {
    throw std::logic_error("divisor numerator " + b.num_.to_string() +
                           " does not split into cyclotomic atoms");
  }
  FactoredFraction out;
  out.num_ = a.num_ * b.den_poly();
  if (factored->unit < 0) out.num_ = -out.num_;
  out.scale_ = a.scale_ * abs(factored->unit);
  out.mono_ = {a.mono_.q + factored->mono.q, a.mono_.t + factored->mono.t};
  out.atoms_ = a.atoms_;
  for (const auto& [atom, e] : factored->atoms) out.atoms_[atom] += e;
  out.reduce();
  return out;
}

QTFraction FactoredFraction::to_fraction() const {
  IntPoly den = den_poly();
  if (den.terms().front().second < 0) return {-num_, -den};
  return {num_, std::move(den)};
}

bool operator==(const FactoredFraction& a, const FactoredFraction& b) {
  return frac_eq(a.to_fraction(), b.to_fraction());
}

void FactoredFraction::reduce() {
  if (num_.is_zero()) {
    scale_ = 1;
    mono_ = {};
    atoms_.clear();
    return;
  }
  const Monomial content = num_.monomial_content();
  const Monomial common{std::min(content.q, mono_.q),
                        std::min(content.t, mono_.t)};
  if (common != Monomial{}) {
    num_ = num_.divided_by_monomial(common);
    mono_.q -= common.q;
    mono_.t -= common.t;
  }
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    while (it->second > 0 && strip_atom(num_, it->first)) --it->second;
    it = it->second == 0 ? atoms_.erase(it) : std::next(it);
  }
  Integer g;
  const Integer c = num_.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), scale_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_by_scalar(g);
    scale_ /= g;
  }
}

}  // namespace hookbox
