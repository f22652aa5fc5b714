// One PASS/FAIL line per acceptance criterion, each under its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "hookbox/identities.hpp"
#include "hookbox/symfunc.hpp"
#include "random_partitions.hpp"

using namespace hookbox;
using Clock = std::chrono::steady_clock;
using std::chrono::milliseconds;

namespace {

constexpr milliseconds kLimit1{10};
constexpr milliseconds kLimit2{30'000};
constexpr milliseconds kLimit3{60'000};
constexpr milliseconds kLimit4{120'000};
constexpr milliseconds kLimit6{300'000};

struct Outcome {
  bool passed = true;
  std::string detail;
};

bool report(int number, const std::string& title, std::optional<milliseconds> limit,
            const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::ostringstream timing;
  timing << std::fixed;
  timing.precision(ms < 10 ? 3 : 0);
  timing << ms << " ms";
  if (limit) {
    timing << ", limit " << limit->count() << " ms";
    if (ms >= static_cast<double>(limit->count())) {
      outcome.passed = false;
      outcome.detail += " [time limit exceeded]";
    }
  }
  std::printf("%s %d %s: %s (%s)\n", outcome.passed ? "PASS" : "FAIL", number, title.c_str(),
              outcome.detail.c_str(), timing.str().c_str());
  std::fflush(stdout);
  return outcome.passed;
}

template <typename F>
void for_each_case(int max_size, int max_n, F&& f) {
  for (const Partition& lambda : partitions_up_to(max_size)) {
    for (int n = std::max<int>(1, static_cast<int>(lambda.length())); n <= max_n; ++n) {
      f(lambda, n);
    }
  }
}

Outcome running_example() {
  // Oracle: the printed box entries n + c(b) and h(b), and the gap and
  // distance tables of the right-hand side.
  const std::vector<int> lhs_num{5, 6, 7, 8, 9, 4, 5, 6, 7, 3, 4, 5, 6, 2, 3, 4, 1, 2};
  const std::vector<int> lhs_den{9, 8, 6, 4, 1, 7, 6, 4, 2, 6, 5, 3, 1, 4, 3, 1, 2, 1};
  const std::vector<int> rhs_num{2, 3, 5, 7, 1, 3, 5, 2, 4, 2};
  const std::vector<int> rhs_den{1, 2, 3, 4, 1, 2, 3, 1, 2, 1};
  auto prod = [](const std::vector<int>& v) {
    Integer out = 1;
    for (int x : v) out *= x;
    return out;
  };
  Rational oracle_lhs(prod(lhs_num), prod(lhs_den));
  Rational oracle_rhs(prod(rhs_num), prod(rhs_den));
  oracle_lhs.canonicalize();
  oracle_rhs.canonicalize();
  if (oracle_lhs != 175 || oracle_rhs != 175) {
    return {false, "oracle products are " + oracle_lhs.get_str() + " and " + oracle_rhs.get_str()};
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"verify", "--level", "integer", "--lambda", "5,4,4,3,2", "--n", "5"},
                            out, err);
  const bool printed = out.str().find("175 = 175") != std::string::npos;
  const IdentityReport r = verify(Level::integer, Partition{5, 4, 4, 3, 2}, 5);
  const bool ok = code == 0 && printed && r.equal && std::get<Rational>(r.lhs) == oracle_lhs;
  return {ok, "oracle 175/175 from 18+18 and 10+10 entries; verify printed '175 = 175', exit " +
                  std::to_string(code)};
}

Outcome integer_sweep() {
  int cases = 0, failures = 0, non_integers = 0;
  for_each_case(12, 8, [&](const Partition& lambda, int n) {
    ++cases;
    const IdentityReport r = verify(Level::integer, lambda, n);
    if (!r.equal) ++failures;
    if (std::get<Rational>(r.lhs).get_den() != 1) ++non_integers;
  });
  return {failures == 0 && non_integers == 0,
          std::to_string(cases) + " cases, " + std::to_string(failures) + " unequal, " +
              std::to_string(non_integers) + " non-integer left sides"};
}

Outcome polynomial_sweep() {
  int cases = 0, failures = 0, fast_path = 0;
  std::string log;
  for_each_case(10, 8, [&](const Partition& lambda, int n) {
    ++cases;
    const IdentityReport r = verify(Level::polynomial, lambda, n);
    if (!r.equal) ++failures;
    if (!r.fast_path_equal.value_or(false)) {
      ++fast_path;
      log += " " + lambda.to_string() + "/n=" + std::to_string(n);
    }
  });
  return {failures == 0,
          std::to_string(cases) + " cases, " + std::to_string(failures) +
              " unequal by cross-multiplication, " + std::to_string(fast_path) +
              " cancelled-multiset mismatches" + log};
}

Outcome elliptic_sweep() {
  int cases = 0, failures = 0, unbalanced = 0;
  for_each_case(8, 6, [&](const Partition& lambda, int n) {
    ++cases;
    if (!verify(Level::elliptic, lambda, n).equal) ++failures;
    const Completion c = elliptic_complete(elliptic_table(lambda, n));
    if (!(c.added_num == c.added_den)) ++unbalanced;
  });
  return {failures == 0 && unbalanced == 0,
          std::to_string(cases) + " cases, " + std::to_string(failures) + " unequal, " +
              std::to_string(unbalanced) + " unbalanced completions"};
}

Outcome degeneration_chain() {
  int cases = 0, subst_failures = 0, limit_failures = 0;
  for_each_case(8, 6, [&](const Partition& lambda, int n) {
    ++cases;
    const FactorBag reduced = bag_cancel(bag_subst_q_to_t(elliptic_rhs(lambda, n)));
    const FactorBag reduced_lhs = bag_cancel(bag_subst_q_to_t(elliptic_lhs(lambda, n)));
    if (!(reduced == bag_cancel(poly_rhs(lambda, n))) ||
        !(reduced_lhs == bag_cancel(poly_lhs(lambda, n)))) {
      ++subst_failures;
    }
    if (bag_limit_t1(poly_lhs(lambda, n)) != integer_lhs(lambda, n) ||
        bag_limit_t1(poly_rhs(lambda, n)) != integer_rhs(lambda, n)) {
      ++limit_failures;
    }
  });
  return {subst_failures == 0 && limit_failures == 0,
          std::to_string(cases) + " cases, " + std::to_string(subst_failures) +
              " q->t mismatches, " + std::to_string(limit_failures) + " t->1 mismatches"};
}

Outcome macdonald_cross_check() {
  int cases = 0, literal = 0, with_weight = 0;
  std::string first_mismatch;
  for_each_case(6, 5, [&](const Partition& lambda, int n) {
    ++cases;
    const PrincipalCheck c = verify_principal_vs_elliptic(lambda, n);
    if (c.literal_equal) {
      ++literal;
    } else if (first_mismatch.empty()) {
      first_mismatch = lambda.to_string() + " n=" + std::to_string(n);
    }
    if (c.equal) ++with_weight;
  });
  std::string detail = std::to_string(literal) + "/" + std::to_string(cases) +
                       " cases equal as stated";
  if (literal != cases) {
    detail += " (first mismatch " + first_mismatch +
              "); the specialization equals t^{n(lambda)} times the product in " +
              std::to_string(with_weight) + "/" + std::to_string(cases) +
              " cases, so the stated form holds only when n(lambda) = 0";
  }
  return {literal == cases, detail};
}

Outcome specialization_square() {
  int families = 0, failures = 0;
  for (int d = 1; d <= 5; ++d) {
    const auto schur_mismatch = [&](const SymFunc& f, const std::map<Partition, Integer>& oracle) {
      for (const Partition& mu : partitions_of(d)) {
        const auto it = oracle.find(mu);
        const Integer expected = it == oracle.end() ? Integer(0) : it->second;
        if (!(f.coeff_fraction(mu) == QTFraction(IntPoly(expected)))) return true;
      }
      return false;
    };
    for (const Partition& lambda : partitions_of(d)) {
      ++families;
      if (schur_mismatch(specialize_family(lambda, Locus::q_equals_t),
                         schur_ssyt(lambda, d).monomial_coordinates(d)) ||
          schur_mismatch(specialize_family(lambda, Locus::t_equals_1), {{lambda, 1}}) ||
          schur_mismatch(specialize_family(lambda, Locus::q_equals_1),
                         elementary_expand(conjugate(lambda), d).monomial_coordinates(d))) {
        ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(families) + " partitions x 3 loci, " +
                             std::to_string(failures) + " mismatches against tableau, "
                             "monomial and elementary-product oracles"};
}

Outcome row_ladders() {
  std::mt19937 rng(2024);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Partition lambda = hookbox::testing::random_partition(rng, 30);
    const int n = std::max<int>(1, static_cast<int>(lambda.length())) +
                  std::uniform_int_distribution<int>(0, 5)(rng);
    const int i = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<int> expected(static_cast<std::size_t>(lambda.row(i) + n - i));
    std::iota(expected.begin(), expected.end(), 1);
    if (row_ladder(lambda, n, i) != expected) ++failures;
  }
  return {failures == 0, "200 random (lambda, n, i) with |lambda| <= 30, " +
                             std::to_string(failures) + " mismatches"};
}

Outcome invariant_suites() {
  int tri = 0, orth = 0, ext = 0;
  for (int d = 1; d <= 6; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      const SymFunc p = macdonald_p(lambda);
      if (!(p.coeff_fraction(lambda) == QTFraction(IntPoly(1)))) ++tri;
      for (const auto& [mu, c] : p.coeffs) {
        if (!dominated_by(mu, lambda)) ++tri;
      }
      const SymFunc other = macdonald_p(lambda, default_degree_cap(), Extension::conjugate_lexicographic);
      for (const Partition& mu : partitions_of(d)) {
        if (!(p.coeff(mu) == other.coeff(mu))) ++ext;
      }
    }
  }
  for (int d = 1; d <= 5; ++d) {
    const auto gram = gram_data(d);
    std::vector<std::vector<FactoredFraction>> coords;
    for (const Partition& lambda : gram->partitions) coords.push_back(macdonald_p(lambda).coordinates(*gram));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (scalar_product(coords[i], coords[j], *gram).is_zero() != (i != j)) ++orth;
      }
    }
  }
  bool capped = false;
  try {
    macdonald_p(Partition{default_degree_cap() + 1});
  } catch (const ResourceError&) {
    capped = true;
  }
  return {tri == 0 && orth == 0 && ext == 0 && capped,
          "triangularity (degree <= 6): " + std::to_string(tri) +
              " violations; orthogonality (degree <= 5): " + std::to_string(orth) +
              "; extension independence (degree <= 6, first non-trivial at 6): " +
              std::to_string(ext) + "; degree cap " + std::to_string(default_degree_cap()) +
              (capped ? " enforced" : " NOT enforced")};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "running example", kLimit1, running_example);
  all &= report(2, "integer identity sweep |lambda|<=12 n<=8", kLimit2, integer_sweep);
  all &= report(3, "polynomial identity sweep |lambda|<=10 n<=8", kLimit3, polynomial_sweep);
  all &= report(4, "elliptic identity sweep |lambda|<=8 n<=6", kLimit4, elliptic_sweep);
  all &= report(5, "degeneration chain |lambda|<=8 n<=6", std::nullopt, degeneration_chain);
  all &= report(6, "principal specialization vs elliptic product |lambda|<=6 n<=5", kLimit6,
                macdonald_cross_check);
  all &= report(7, "specialization square |lambda|<=5", std::nullopt, specialization_square);
  all &= report(8, "row ladder", std::nullopt, row_ladders);
  all &= report(9, "Macdonald invariant suites within the degree cap", std::nullopt,
                invariant_suites);
  return all ? 0 : 1;
}
