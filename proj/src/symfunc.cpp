#include "hookbox/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <tuple>

namespace hookbox {

namespace {

std::vector<int> padded(const Partition& mu, int nvars) {
  std::vector<int> exps(mu.parts().begin(), mu.parts().end());
  exps.resize(static_cast<std::size_t>(nvars), 0);
  return exps;
}

// Gauss–Jordan inverse over Q.
std::vector<std::vector<Rational>> invert(
    const std::vector<std::vector<Integer>>& matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = matrix[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("p-to-m matrix is singular");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse[i].assign(a[i].begin() + static_cast<long>(n), a[i].end());
  }
  return inverse;
}

std::shared_ptr<const GramData> build_gram(int d) {
  auto gram = std::make_shared<GramData>();
  gram->degree = d;
  gram->partitions = partitions_of(d);
  const std::size_t n = gram->partitions.size();
  gram->p_to_m.assign(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const XPoly p = power_sum_expand(gram->partitions[i], d);
    for (std::size_t j = 0; j < n; ++j) {
      gram->p_to_m[i][j] = p.coefficient_of(gram->partitions[j]);
    }
  }
  gram->m_to_p = invert(gram->p_to_m);
  for (const Partition& mu : gram->partitions) {
    const Integer z = z_factor(mu);
    gram->z.push_back(z);
    IntPoly num(z);
    std::vector<Monomial> den;
    for (int part : mu.parts()) {
      num *= IntPoly::one_minus(static_cast<std::uint32_t>(part), 0);
      den.push_back({0, static_cast<std::uint32_t>(part)});
    }
    gram->norms.push_back(FactoredFraction::over_binomials(num, den));
  }
  return gram;
}

std::vector<FactoredFraction> to_power_sums(
    const std::vector<FactoredFraction>& m_coords, const GramData& gram) {
  const std::size_t n = gram.partitions.size();
  std::vector<FactoredFraction> out(n);
  for (std::size_t nu = 0; nu < n; ++nu) {
    if (m_coords[nu].is_zero()) continue;
    for (std::size_t rho = 0; rho < n; ++rho) {
      if (gram.m_to_p[nu][rho] == 0) continue;
      out[rho] += m_coords[nu] * FactoredFraction(gram.m_to_p[nu][rho]);
    }
  }
  return out;
}

using BasisTable = std::map<Partition, std::vector<FactoredFraction>>;

std::shared_ptr<const BasisTable> build_macdonald_basis(int d, Extension ext,
                                                        int cap) {
  const auto gram = gram_data(d, cap);
  const std::size_t n = gram->partitions.size();
  struct Done {
    std::vector<FactoredFraction> m;
    // p-coordinates · norm_ρ / ⟨P, P⟩: pairing with a p-vector gives the
    // projection coefficient onto P.
    std::vector<FactoredFraction> dual;
  };
  std::vector<Done> done;
  auto table = std::make_shared<BasisTable>();
  for (const Partition& lambda : linear_extension(d, ext)) {
    const std::size_t li = gram->index_of(lambda);
    std::vector<FactoredFraction> m(n);
    m[li] = FactoredFraction(IntPoly(1));
    for (const Done& prev : done) {
      FactoredFraction coeff;
      for (std::size_t rho = 0; rho < n; ++rho) {
        if (gram->m_to_p[li][rho] == 0 || prev.dual[rho].is_zero()) continue;
        coeff += prev.dual[rho] * FactoredFraction(gram->m_to_p[li][rho]);
      }
      if (coeff.is_zero()) continue;
      for (std::size_t nu = 0; nu < n; ++nu) {
        if (!prev.m[nu].is_zero()) m[nu] -= coeff * prev.m[nu];
      }
    }
    const std::vector<FactoredFraction> p = to_power_sums(m, *gram);
    FactoredFraction norm;
    for (std::size_t rho = 0; rho < n; ++rho) {
      if (!p[rho].is_zero()) norm += p[rho] * p[rho] * gram->norms[rho];
    }
    const FactoredFraction inverse_norm = FactoredFraction(IntPoly(1)) / norm;
    Done entry{m, std::vector<FactoredFraction>(n)};
    for (std::size_t rho = 0; rho < n; ++rho) {
      if (!p[rho].is_zero()) {
        entry.dual[rho] = p[rho] * gram->norms[rho] * inverse_norm;
      }
    }
    (*table)[lambda] = m;
    done.push_back(std::move(entry));
  }
  return table;
}

}  // namespace

int default_degree_cap() {
  if (const char* env = std::getenv("HOOKBOX_DEGREE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 64) {
      return static_cast<int>(value);
    }
  }
  return 8;
}

XPoly XPoly::constant(int nvars, const Integer& c) {
  XPoly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

void XPoly::add_term(const std::vector<int>& exps, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(exps, 0);
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly out(std::max(a.nvars, b.nvars));
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(static_cast<std::size_t>(out.nvars), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
  XPoly out = a;
  out.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [e, c] : b.terms) out.add_term(e, c);
  return out;
}

Integer XPoly::coefficient_of(const Partition& mu) const {
  if (static_cast<int>(mu.length()) > nvars) return 0;
  auto it = terms.find(padded(mu, nvars));
  return it == terms.end() ? Integer(0) : it->second;
}

std::map<Partition, Integer> XPoly::monomial_coordinates(int degree) const {
  std::map<Partition, Integer> out;
  for (const Partition& mu : partitions_of(degree)) {
    Integer c = coefficient_of(mu);
    if (c != 0) out.emplace(mu, std::move(c));
  }
  return out;
}

bool XPoly::is_symmetric() const {
  for (const auto& [e, c] : terms) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto it = terms.find(sorted);
    if (it == terms.end() || it->second != c) return false;
  }
  return true;
}

std::string XPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
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

XPoly monomial_expand(const Partition& lambda, int nvars) {
  XPoly out(nvars);
  if (static_cast<int>(lambda.length()) > nvars) return out;
  std::vector<int> exps = padded(lambda, nvars);
  std::sort(exps.begin(), exps.end());
  do {
    out.add_term(exps, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

XPoly power_sum_expand(const Partition& lambda, int nvars) {
  XPoly out = XPoly::constant(nvars, 1);
  for (int part : lambda.parts()) {
    XPoly p(nvars);
    for (int k = 0; k < nvars; ++k) {
      std::vector<int> e(static_cast<std::size_t>(nvars), 0);
      e[static_cast<std::size_t>(k)] = part;
      p.add_term(e, 1);
    }
    out = out * p;
  }
  return out;
}

XPoly elementary_expand(const Partition& lambda, int nvars) {
  XPoly out = XPoly::constant(nvars, 1);
  for (int part : lambda.parts()) {
    XPoly e(nvars);
    if (part <= nvars) {
      std::vector<int> select(static_cast<std::size_t>(nvars), 0);
      std::fill(select.end() - part, select.end(), 1);
      do {
        e.add_term(select, 1);
      } while (std::next_permutation(select.begin(), select.end()));
    }
    out = out * e;
  }
  return out;
}

XPoly schur_ssyt(const Partition& lambda, int n) {
  XPoly out(n);
  const std::vector<BoxCoord> cells = boxes(lambda);
  std::vector<std::vector<int>> tableau(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    tableau[i].assign(static_cast<std::size_t>(lambda.row(i + 1)), 0);
  }
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.add_term(weight, 1);
      return;
    }
    const auto row = static_cast<std::size_t>(cells[k].row - 1);
    const auto col = static_cast<std::size_t>(cells[k].col - 1);
    int lo = 1;
    if (col > 0) lo = std::max(lo, tableau[row][col - 1]);
    if (row > 0) lo = std::max(lo, tableau[row - 1][col] + 1);
    for (int v = lo; v <= n; ++v) {
      tableau[row][col] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      self(self, k + 1);
      --weight[static_cast<std::size_t>(v - 1)];
    }
    tableau[row][col] = 0;
  };
  if (n >= 1 || lambda.empty()) fill(fill, 0);
  return out;
}

Integer z_factor(const Partition& mu) {
  Integer z = 1;
  for (int k = 1; k <= mu.size(); ++k) {
    const int m = mu.multiplicity(k);
    for (int j = 1; j <= m; ++j) z *= k * j;
  }
  return z;
}

std::size_t GramData::index_of(const Partition& mu) const {
  auto it = std::find(partitions.begin(), partitions.end(), mu);
  if (it == partitions.end()) {
    throw DomainError(mu.to_string() + " is not a partition of " +
                      std::to_string(degree));
  }
  return static_cast<std::size_t>(it - partitions.begin());
}

std::shared_ptr<const GramData> gram_data(int d, int cap) {
  if (d < 1) throw DomainError("gram data needs degree >= 1");
  if (d > cap) {
    throw ResourceError("degree " + std::to_string(d) +
                        " exceeds the Macdonald degree cap " +
                        std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GramData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto gram = build_gram(d);
  std::lock_guard lock(mutex);
  return cache.emplace(d, std::move(gram)).first->second;
}

FactoredFraction scalar_product(const std::vector<FactoredFraction>& f,
                                const std::vector<FactoredFraction>& g,
                                const GramData& gram) {
  const auto fp = to_power_sums(f, gram);
  const auto gp = to_power_sums(g, gram);
  FactoredFraction total;
  for (std::size_t rho = 0; rho < fp.size(); ++rho) {
    if (fp[rho].is_zero() || gp[rho].is_zero()) continue;
    total += fp[rho] * gp[rho] * gram.norms[rho];
  }
  return total;
}

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::monomial:
      return "monomial";
    case Basis::powersum:
      return "powersum";
    case Basis::elementary:
      return "elementary";
    case Basis::schur:
      return "schur";
    case Basis::macdonald_p:
      return "macdonaldP";
  }
  return "?";
}

void SymFunc::set(const Partition& mu, FactoredFraction c) {
  if (mu.size() != degree) {
    throw DomainError(mu.to_string() + " has the wrong size for degree " +
                      std::to_string(degree));
  }
  if (c.is_zero()) {
    coeffs.erase(mu);
  } else {
    coeffs[mu] = std::move(c);
  }
}

FactoredFraction SymFunc::coeff(const Partition& mu) const {
  auto it = coeffs.find(mu);
  return it == coeffs.end() ? FactoredFraction{} : it->second;
}

std::vector<FactoredFraction> SymFunc::coordinates(const GramData& gram) const {
  std::vector<FactoredFraction> out(gram.partitions.size());
  for (const auto& [mu, c] : coeffs) out[gram.index_of(mu)] = c;
  return out;
}

std::vector<Partition> linear_extension(int d, Extension ext) {
  std::vector<Partition> order = partitions_of(d);
  if (ext == Extension::lexicographic) {
    std::reverse(order.begin(), order.end());
  } else {
    std::sort(order.begin(), order.end(),
              [](const Partition& a, const Partition& b) {
                return conjugate(b) < conjugate(a);
              });
  }
  return order;
}

SymFunc macdonald_p(const Partition& lambda, int cap, Extension ext) {
  SymFunc out;
  out.degree = lambda.size();
  out.basis = Basis::monomial;
  if (lambda.empty()) {
    out.set(lambda, FactoredFraction(IntPoly(1)));
    return out;
  }
  if (lambda.size() > cap) {
    throw ResourceError("|lambda| = " + std::to_string(lambda.size()) +
                        " exceeds the Macdonald degree cap " +
                        std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<std::pair<int, Extension>, std::shared_ptr<const BasisTable>>
      cache;
  const auto key = std::make_pair(lambda.size(), ext);
  std::shared_ptr<const BasisTable> table;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) table = it->second;
  }
  if (!table) {
    table = build_macdonald_basis(lambda.size(), ext, cap);
    std::lock_guard lock(mutex);
    cache.emplace(key, table);
  }
  const auto gram = gram_data(lambda.size(), cap);
  const auto& coords = table->at(lambda);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    out.set(gram->partitions[k], coords[k]);
  }
  return out;
}

IntPoly principal_monomial(const Partition& mu, int n) {
  if (static_cast<int>(mu.length()) > n) return {};
  std::vector<int> exps = padded(mu, n);
  std::sort(exps.begin(), exps.end());
  std::vector<IntPoly::Term> terms;
  do {
    std::uint32_t power = 0;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      power += static_cast<std::uint32_t>(k) *
               static_cast<std::uint32_t>(exps[k]);
    }
    terms.emplace_back(Monomial{0, power}, Integer(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return IntPoly::from_terms(std::move(terms));
}

QTFraction principal_specialize(const SymFunc& f, int n) {
  if (n < 1 && f.degree > 0) throw DomainError("principal specialization needs n >= 1");
  FactoredFraction total;
  for (const auto& [mu, c] : f.coeffs) {
    total += c * FactoredFraction(principal_monomial(mu, n));
  }
  return total.to_fraction();
}

PrincipalCheck verify_principal_vs_elliptic(const Partition& lambda, int n,
                                            int cap) {
  PrincipalCheck check;
  check.elliptic = bag_expand(elliptic_lhs(lambda, n));
  check.principal = principal_specialize(macdonald_p(lambda, cap), n);
  check.weight = weighted_size(lambda);
  check.literal_equal = frac_eq(check.principal, check.elliptic);
  const QTFraction shift(IntPoly::monomial(
      {0, static_cast<std::uint32_t>(check.weight)}));
  check.equal = frac_eq(check.principal, shift * check.elliptic);
  return check;
}

std::string to_string(Locus locus) {
  switch (locus) {
    case Locus::q_equals_t:
      return "q=t";
    case Locus::t_equals_1:
      return "t=1";
    case Locus::q_equals_1:
      return "q=1";
    case Locus::q_equals_0:
      return "q=0";
    case Locus::t_equals_0:
      return "t=0";
  }
  return "?";
}

Locus parse_locus(std::string_view text) {
  for (Locus l : {Locus::q_equals_t, Locus::t_equals_1, Locus::q_equals_1,
                  Locus::q_equals_0, Locus::t_equals_0}) {
    if (text == to_string(l)) return l;
  }
  throw DomainError("unknown specialization '" + std::string(text) +
                    "' (expected q=t, t=1, q=1, q=0 or t=0)");
}

QTFraction specialize_coefficient(const QTFraction& c, Locus locus) {
  switch (locus) {
    case Locus::q_equals_t:
      return frac_subst(c, Monomial{0, 1}, KeepVar{});
    case Locus::t_equals_1:
      return limit_at(c, Var::t, 1);
    case Locus::q_equals_1:
      return limit_at(c, Var::q, 1);
    case Locus::q_equals_0:
      return limit_at(c, Var::q, 0);
    case Locus::t_equals_0:
      return limit_at(c, Var::t, 0);
  }
  return c;
}

SymFunc specialize_family(const Partition& lambda, Locus locus, int cap) {
  const SymFunc p = macdonald_p(lambda, cap);
  SymFunc out;
  out.degree = p.degree;
  out.basis = Basis::monomial;
  for (const auto& [mu, c] : p.coeffs) {
    const QTFraction s = specialize_coefficient(c.to_fraction(), locus);
    if (!s.is_zero()) out.set(mu, FactoredFraction::from_fraction(s));
  }
  return out;
}

}  // namespace hookbox
