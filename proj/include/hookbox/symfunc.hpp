// Symmetric functions at small degree: explicit x-expansions, the q,t
// power-sum scalar product, Macdonald P by Gram–Schmidt, principal
// specialization and the degenerations of P at q=t, t=1, q=1, q=0, t=0.
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hookbox/factored.hpp"
#include "hookbox/identities.hpp"
#include "hookbox/partition.hpp"

namespace hookbox {

/// A request exceeds a configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degree cap for Macdonald computations: HOOKBOX_DEGREE_CAP when set to a
/// positive integer, 8 otherwise.
int default_degree_cap();

/// Polynomial in x_1..x_nvars with integer coefficients.
struct XPoly {
  int nvars = 0;
  std::map<std::vector<int>, Integer> terms;

  XPoly() = default;
  explicit XPoly(int n) : nvars(n) {}
  static XPoly constant(int nvars, const Integer& c);

  void add_term(const std::vector<int>& exps, const Integer& c);
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator+(const XPoly& a, const XPoly& b);
  friend bool operator==(const XPoly&, const XPoly&) = default;

  /// Coefficient of x^μ (μ padded with zeros), i.e. the m_μ coordinate of a
  /// symmetric polynomial.
  Integer coefficient_of(const Partition& mu) const;
  /// m-basis coordinates over all partitions of `degree` (zeros dropped).
  std::map<Partition, Integer> monomial_coordinates(int degree) const;
  bool is_symmetric() const;
  std::string to_string() const;  // "x1*x2 + x1*x3 + x2*x3"
};

/// m_λ(x_1..x_nvars): every distinct rearrangement of λ padded with zeros.
XPoly monomial_expand(const Partition& lambda, int nvars);
/// p_λ = Π_i (x_1^{λ_i} + ... + x_nvars^{λ_i}).
XPoly power_sum_expand(const Partition& lambda, int nvars);
/// e_λ = Π_i e_{λ_i}, each e_k a sum over k-subsets.
XPoly elementary_expand(const Partition& lambda, int nvars);
/// Σ over semistandard tableaux of shape λ with entries in 1..n of x^weight.
XPoly schur_ssyt(const Partition& lambda, int n);

/// z_μ = Π_k k^{m_k} m_k!.
Integer z_factor(const Partition& mu);

/// Change of basis between m and p in degree d, and the diagonal q,t-norms
/// ⟨p_μ, p_μ⟩ = z_μ Π_i (1 − q^{μ_i}) / (1 − t^{μ_i}).
struct GramData {
  int degree = 0;
  /// Partitions of d in decreasing lexicographic order; all vectors and
  /// matrices are indexed this way.
  std::vector<Partition> partitions;
  /// p_μ = Σ_ν p_to_m[μ][ν] m_ν.
  std::vector<std::vector<Integer>> p_to_m;
  /// m_ν = Σ_ρ m_to_p[ν][ρ] p_ρ.
  std::vector<std::vector<Rational>> m_to_p;
  std::vector<Integer> z;
  std::vector<FactoredFraction> norms;

  std::size_t index_of(const Partition& mu) const;
};

/// Throws ResourceError unless 1 ≤ d ≤ cap.
std::shared_ptr<const GramData> gram_data(int d,
                                          int cap = default_degree_cap());

/// Scalar product of two coordinate vectors in the m basis (indexed like
/// GramData::partitions).
FactoredFraction scalar_product(const std::vector<FactoredFraction>& f,
                                const std::vector<FactoredFraction>& g,
                                const GramData& gram);

enum class Basis { monomial, powersum, elementary, schur, macdonald_p };
std::string to_string(Basis basis);

/// Homogeneous symmetric function of a fixed degree. Zero coefficients are
/// never stored.
struct SymFunc {
  int degree = 0;
  Basis basis = Basis::monomial;
  std::map<Partition, FactoredFraction> coeffs;

  void set(const Partition& mu, FactoredFraction c);
  FactoredFraction coeff(const Partition& mu) const;
  QTFraction coeff_fraction(const Partition& mu) const {
    return coeff(mu).to_fraction();
  }
  /// Coordinates in GramData::partitions order.
  std::vector<FactoredFraction> coordinates(const GramData& gram) const;
};

/// Linear extensions of dominance order used to run Gram–Schmidt. Both list
/// partitions smallest first.
enum class Extension {
  /// Increasing lexicographic order.
  lexicographic,
  /// Decreasing lexicographic order of the conjugate partitions.
  conjugate_lexicographic,
};
std::vector<Partition> linear_extension(int d, Extension ext);

/// P_λ in the monomial basis: monic, supported below λ, orthogonal to every
/// m_μ earlier in the extension. Results are cached per (degree, extension).
SymFunc macdonald_p(const Partition& lambda, int cap = default_degree_cap(),
                    Extension ext = Extension::lexicographic);

/// m_μ(1, t, ..., t^{n−1}).
IntPoly principal_monomial(const Partition& mu, int n);
/// f(1, t, ..., t^{n−1}) for f in the monomial basis.
QTFraction principal_specialize(const SymFunc& f, int n);

struct PrincipalCheck {
  QTFraction principal;
  QTFraction elliptic;
  /// n(λ) = Σ (i−1) λ_i.
  int weight = 0;
  /// principal == elliptic, as literally written.
  bool literal_equal = false;
  /// principal == t^{n(λ)} · elliptic.
  bool equal = false;
};

/// Compares the principal specialization of P_λ with the expanded elliptic
/// left-hand side. The specialization carries the extra monomial t^{n(λ)};
/// `equal` accounts for it, `literal_equal` does not.
PrincipalCheck verify_principal_vs_elliptic(const Partition& lambda, int n,
                                            int cap = default_degree_cap());

enum class Locus { q_equals_t, t_equals_1, q_equals_1, q_equals_0, t_equals_0 };
std::string to_string(Locus locus);
/// "q=t", "t=1", "q=1", "q=0", "t=0".
Locus parse_locus(std::string_view text);

/// P_λ with every coefficient specialized at the locus, using limits that
/// strip vanishing factors first. Throws PoleError if a coefficient has a
/// genuine pole there.
SymFunc specialize_family(const Partition& lambda, Locus locus,
                          int cap = default_degree_cap());

/// Specializes an explicit coefficient the same way.
QTFraction specialize_coefficient(const QTFraction& c, Locus locus);

}  // namespace hookbox
