#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "hookbox/identities.hpp"
#include "hookbox/json_io.hpp"
#include "hookbox/symfunc.hpp"

using namespace hookbox;

namespace {

const IntPoly q = IntPoly::q_var();
const IntPoly t = IntPoly::t_var();

QTFraction coeff(const SymFunc& f, const Partition& mu) { return f.coeff_fraction(mu); }

// Coordinates of an oracle expansion, compared against every partition of d.
void check_coordinates(const SymFunc& f, const std::map<Partition, Integer>& oracle, int d) {
  for (const Partition& mu : partitions_of(d)) {
    const auto it = oracle.find(mu);
    const Integer expected = it == oracle.end() ? Integer(0) : it->second;
    CAPTURE(mu.to_string());
    CHECK(coeff(f, mu) == QTFraction(IntPoly(expected)));
  }
}

std::string golden_path(const std::string& name) {
  return std::string(HOOKBOX_GOLDEN_DIR) + "/" + name;
}

// Compares specialize_family at one locus with a pinned file; rewrites the
// file instead when HOOKBOX_WRITE_GOLDEN is set.
void check_golden(Locus locus, const std::string& name) {
  Json computed{{"at", to_string(locus)}, {"families", Json::array()}};
  for (int d = 1; d <= 5; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      computed["families"].push_back(
          {{"lambda", to_json(lambda)}, {"P", to_json(specialize_family(lambda, locus))}});
    }
  }
  if (std::getenv("HOOKBOX_WRITE_GOLDEN")) {
    std::ofstream(golden_path(name)) << computed.dump(1) << "\n";
    return;
  }
  std::ifstream in(golden_path(name));
  REQUIRE(in.good());
  const Json pinned = Json::parse(in);
  REQUIRE(pinned.at("families").size() == computed["families"].size());
  for (std::size_t k = 0; k < pinned["families"].size(); ++k) {
    const Json& entry = pinned["families"][k];
    const Partition lambda = partition_from_json(entry.at("lambda"));
    const SymFunc expected = symfunc_from_json(entry.at("P"));
    const SymFunc actual = specialize_family(lambda, locus);
    CAPTURE(lambda.to_string());
    for (const Partition& mu : partitions_of(lambda.size())) {
      CHECK(frac_eq(coeff(actual, mu), coeff(expected, mu)));
    }
  }
}

}  // namespace

TEST_CASE("explicit expansions") {
  CHECK(monomial_expand(Partition{1, 1}, 3).to_string() == "x1*x2 + x1*x3 + x2*x3");
  CHECK(monomial_expand(Partition{2}, 2).to_string() == "x1^2 + x2^2");
  CHECK(monomial_expand(Partition{3}, 2).to_string() == "x1^3 + x2^3");
  CHECK(elementary_expand(Partition{2}, 3) == monomial_expand(Partition{1, 1}, 3));
  CHECK(schur_ssyt(Partition{2}, 2).to_string() == "x1^2 + x1*x2 + x2^2");
  CHECK(schur_ssyt(Partition{1, 1}, 2).to_string() == "x1*x2");
  CHECK(schur_ssyt(Partition{2, 1}, 3).is_symmetric());

  // s_λ(1, ..., 1) against the integer left side, 175 for the running example.
  const XPoly s = schur_ssyt(Partition{5, 4, 4, 3, 2}, 5);
  Integer at_ones = 0;
  for (const auto& [exps, c] : s.terms) at_ones += c;
  CHECK(Rational(at_ones) == integer_lhs(Partition{5, 4, 4, 3, 2}, 5));
  CHECK(at_ones == 175);
}

TEST_CASE("gram data") {
  const auto g1 = gram_data(1);
  CHECK(g1->p_to_m == std::vector<std::vector<Integer>>{{1}});
  const auto g2 = gram_data(2);
  REQUIRE(g2->partitions == std::vector<Partition>{{2}, {1, 1}});
  CHECK(g2->p_to_m[0] == std::vector<Integer>{1, 0});
  CHECK(g2->p_to_m[1] == std::vector<Integer>{1, 2});
  CHECK(g2->z == std::vector<Integer>{2, 2});
  CHECK(z_factor(Partition{2, 2, 1}) == 8);
  CHECK(z_factor(Partition{}) == 1);
  // The inverse really is an inverse.
  const auto g5 = gram_data(5);
  for (std::size_t i = 0; i < g5->partitions.size(); ++i) {
    for (std::size_t j = 0; j < g5->partitions.size(); ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < g5->partitions.size(); ++k) {
        sum += g5->m_to_p[i][k] * g5->p_to_m[k][j];
      }
      CHECK(sum == (i == j ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(gram_data(0), DomainError);
  CHECK_THROWS_AS(gram_data(9, 8), ResourceError);
}

TEST_CASE("small Macdonald polynomials by hand") {
  const SymFunc p1 = macdonald_p(Partition{1});
  CHECK(coeff(p1, Partition{1}) == QTFraction(IntPoly(1)));
  const SymFunc p11 = macdonald_p(Partition{1, 1});
  CHECK(p11.coeffs.size() == 1);
  CHECK(coeff(p11, Partition{1, 1}) == QTFraction(IntPoly(1)));

  const SymFunc p2 = macdonald_p(Partition{2});
  CHECK(coeff(p2, Partition{2}) == QTFraction(IntPoly(1)));
  CHECK(coeff(p2, Partition{1, 1}) == QTFraction((1 + q) * (1 - t), 1 - q * t));

  // Known closed form for the (1,1,1) coefficient of P_(2,1).
  const SymFunc p21 = macdonald_p(Partition{2, 1});
  CHECK(coeff(p21, Partition{1, 1, 1}) ==
        QTFraction((1 - t) * (2 + q + t + 2 * q * t), 1 - q * t * t));

  const SymFunc empty = macdonald_p(Partition{});
  CHECK(coeff(empty, Partition{}) == QTFraction(IntPoly(1)));
  CHECK_THROWS_AS(macdonald_p(Partition{3, 2}, 4), ResourceError);
}

TEST_CASE("triangularity up to degree 6") {
  for (int d = 1; d <= 6; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      const SymFunc p = macdonald_p(lambda);
      CAPTURE(lambda.to_string());
      CHECK(coeff(p, lambda) == QTFraction(IntPoly(1)));
      for (const auto& [mu, c] : p.coeffs) {
        CHECK(dominated_by(mu, lambda));
        CHECK_FALSE(c.is_zero());
      }
    }
  }
}

TEST_CASE("orthogonality up to degree 5") {
  for (int d = 1; d <= 5; ++d) {
    const auto gram = gram_data(d);
    const auto& parts = gram->partitions;
    std::vector<std::vector<FactoredFraction>> coords;
    for (const Partition& lambda : parts) coords.push_back(macdonald_p(lambda).coordinates(*gram));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const FactoredFraction s = scalar_product(coords[i], coords[j], *gram);
        CAPTURE(parts[i].to_string());
        CAPTURE(parts[j].to_string());
        CHECK(s.is_zero() == (i != j));
      }
    }
  }
}

TEST_CASE("the two linear extensions give the same polynomials") {
  // Dominance is a total order through degree 5, so the extensions first
  // differ in degree 6; every degree up to 6 is compared.
  CHECK(linear_extension(4, Extension::lexicographic) ==
        linear_extension(4, Extension::conjugate_lexicographic));
  CHECK(linear_extension(6, Extension::lexicographic) !=
        linear_extension(6, Extension::conjugate_lexicographic));
  for (int d = 1; d <= 6; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      const SymFunc a = macdonald_p(lambda, default_degree_cap(), Extension::lexicographic);
      const SymFunc b =
          macdonald_p(lambda, default_degree_cap(), Extension::conjugate_lexicographic);
      CAPTURE(lambda.to_string());
      for (const Partition& mu : partitions_of(d)) CHECK(a.coeff(mu) == b.coeff(mu));
    }
  }
}

TEST_CASE("principal specialization") {
  SymFunc m2;
  m2.degree = 2;
  m2.set(Partition{2}, FactoredFraction(IntPoly(1)));
  CHECK(principal_specialize(m2, 2) == QTFraction(1 + t * t));
  CHECK(principal_monomial(Partition{1, 1}, 3) == t + t * t + t * t * t);

  const QTFraction expected((1 + t) * (1 - q * t * t), 1 - q * t);
  CHECK(principal_specialize(macdonald_p(Partition{2}), 2) == expected);
  CHECK(principal_specialize(specialize_family(Partition{2}, Locus::q_equals_t), 2) ==
        QTFraction(1 + t + t * t));

  const PrincipalCheck one = verify_principal_vs_elliptic(Partition{1}, 2);
  CHECK(one.equal);
  CHECK(one.principal == QTFraction(1 + t));
  const PrincipalCheck two = verify_principal_vs_elliptic(Partition{2}, 2);
  CHECK(two.equal);
  CHECK(two.literal_equal);
  CHECK(two.principal == expected);
}

TEST_CASE("principal specialization against the elliptic product, |lambda| <= 6") {
  // The specialization carries an extra factor t^{n(λ)}; it matches the
  // product exactly when n(λ) = 0.
  for (const Partition& lambda : partitions_up_to(6)) {
    for (int n = std::max<int>(1, static_cast<int>(lambda.length())); n <= 5; ++n) {
      const PrincipalCheck c = verify_principal_vs_elliptic(lambda, n);
      CAPTURE(lambda.to_string());
      CAPTURE(n);
      CHECK(c.equal);
      CHECK(c.literal_equal == (weighted_size(lambda) == 0));
    }
  }
}

TEST_CASE("specialization square against independent oracles, |lambda| <= 5") {
  for (int d = 1; d <= 5; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      CAPTURE(lambda.to_string());
      check_coordinates(specialize_family(lambda, Locus::q_equals_t),
                        schur_ssyt(lambda, d).monomial_coordinates(d), d);
      check_coordinates(specialize_family(lambda, Locus::t_equals_1), {{lambda, 1}}, d);
      check_coordinates(specialize_family(lambda, Locus::q_equals_1),
                        elementary_expand(conjugate(lambda), d).monomial_coordinates(d), d);
    }
  }
  const SymFunc s2 = specialize_family(Partition{2}, Locus::q_equals_t);
  CHECK(coeff(s2, Partition{2}) == QTFraction(IntPoly(1)));
  CHECK(coeff(s2, Partition{1, 1}) == QTFraction(IntPoly(1)));
  CHECK(coeff(specialize_family(Partition{2}, Locus::t_equals_1), Partition{1, 1}).is_zero());
  CHECK(coeff(specialize_family(Partition{1, 1}, Locus::q_equals_1), Partition{1, 1}) ==
        QTFraction(IntPoly(1)));
}

TEST_CASE("Schur specialization recovers the integer identity at t = 1") {
  for (const Partition& lambda : partitions_up_to(5)) {
    for (int n = std::max<int>(1, static_cast<int>(lambda.length())); n <= 5; ++n) {
      const QTFraction s = principal_specialize(specialize_family(lambda, Locus::q_equals_t), n);
      CAPTURE(lambda.to_string());
      CAPTURE(n);
      CHECK(limit_t1(s) == QTFraction::from_rational(integer_lhs(lambda, n)));
    }
  }
}

TEST_CASE("Hall-Littlewood and q-Whittaker") {
  CHECK(coeff(specialize_family(Partition{2}, Locus::q_equals_0), Partition{1, 1}) ==
        QTFraction(1 - t));
  CHECK(coeff(specialize_family(Partition{2}, Locus::t_equals_0), Partition{1, 1}) ==
        QTFraction(1 + q));
  // Both corners of the square meet at q = t = 0.
  for (int d = 1; d <= 5; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      const SymFunc hl = specialize_family(lambda, Locus::q_equals_0);
      const SymFunc qw = specialize_family(lambda, Locus::t_equals_0);
      for (const Partition& mu : partitions_of(d)) {
        CAPTURE(lambda.to_string());
        CAPTURE(mu.to_string());
        CHECK(specialize_coefficient(coeff(hl, mu), Locus::t_equals_0) ==
              specialize_coefficient(coeff(qw, mu), Locus::q_equals_0));
      }
    }
  }
  check_golden(Locus::q_equals_0, "hall_littlewood.json");
  check_golden(Locus::t_equals_0, "q_whittaker.json");
}

TEST_CASE("locus names") {
  CHECK(parse_locus("q=t") == Locus::q_equals_t);
  CHECK(to_string(Locus::t_equals_0) == "t=0");
  CHECK_THROWS_AS(parse_locus("q=2"), DomainError);
}
