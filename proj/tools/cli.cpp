#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hookbox/factored.hpp"
#include "hookbox/json_io.hpp"
#include "render.hpp"

namespace hookbox::cli {

namespace {

struct Options {
  std::string lambda;
  std::optional<int> n;
  std::string level;
  std::string format = "ascii";
  std::string overlay = "none";
  std::string stage = "cancelled";
  std::string locus;
  int max_size = 0;
  int max_n = 0;
  unsigned jobs = 0;
};

// Denominator with a positive constant term.
std::string signed_text(const QTFraction& f) {
  if (f.den().coeff({0, 0}) < 0) return QTFraction(-f.num(), -f.den()).to_string();
  return f.to_string();
}

// Cancels what the atom factorization can see; falls back to the raw pair.
std::string pretty(const QTFraction& f) {
  try {
    return signed_text(FactoredFraction::from_fraction(f).to_fraction());
  } catch (const std::logic_error&) {
    return signed_text(f);
  }
}

std::string rational_text(const Rational& r) { return r.get_str(); }

int require_n(const Partition& lambda, const std::optional<int>& n) {
  const int value = n.value_or(static_cast<int>(lambda.length()));
  if (value < static_cast<int>(lambda.length())) {
    throw DomainError("n = " + std::to_string(value) +
                      " is smaller than the length of " + lambda.to_string());
  }
  return value;
}

void reject_latex(Format format, const std::string& command) {
  if (format == Format::latex) {
    throw DomainError("latex output is available for diagram and table, not " +
                      command);
  }
}

// ---------------------------------------------------------------- diagram

int cmd_diagram(const Options& o, std::ostream& out) {
  const Partition lambda = Partition::parse(o.lambda);
  out << render_diagram(lambda, parse_overlay(o.overlay), parse_format(o.format));
  return ok;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  reject_latex(format, "verify");
  const Level level = o.level.empty() ? Level::elliptic : parse_level(o.level);
  const Partition lambda = Partition::parse(o.lambda);
  const int n = require_n(lambda, o.n);
  const IdentityReport report = verify(level, lambda, n);

  if (format == Format::json) {
    out << to_json(report).dump(2) << "\n";
    return report.equal ? ok : unequal;
  }
  out << to_string(level) << " identity for " << lambda.to_string()
      << ", n = " << n << "\n";
  if (level == Level::integer) {
    out << rational_text(std::get<Rational>(report.lhs)) << " = "
        << rational_text(std::get<Rational>(report.rhs)) << "\n";
  } else {
    const auto& lhs = std::get<FactorBag>(report.lhs);
    const auto& rhs = std::get<FactorBag>(report.rhs);
    out << "lhs: " << lhs.to_string() << "\n";
    out << "rhs: " << rhs.to_string() << "\n";
    out << "after cancellation: " << bag_cancel(lhs).to_string() << "  vs  "
        << bag_cancel(rhs).to_string() << "\n";
    out << "cancelled factor multisets: "
        << (report.fast_path_equal.value_or(false) ? "equal" : "different")
        << "\n";
    out << "value: " << pretty(bag_expand(lhs)) << "\n";
  }
  out << (report.equal ? "equal" : "NOT EQUAL") << "\n";
  return report.equal ? ok : unequal;
}

// ------------------------------------------------------------------ sweep

struct CaseResult {
  Partition lambda;
  int n = 0;
  bool passed = true;
  bool fast_path_disagrees = false;
  std::string problem;
};

CaseResult check_case(Level level, const Partition& lambda, int n) {
  CaseResult result;
  result.lambda = lambda;
  result.n = n;
  const IdentityReport report = verify(level, lambda, n);
  if (!report.equal) {
    result.passed = false;
    result.problem = "sides differ";
  }
  if (level == Level::integer) {
    const Rational& lhs = std::get<Rational>(report.lhs);
    if (lhs.get_den() != 1) {
      result.passed = false;
      result.problem = "left-hand side " + lhs.get_str() + " is not an integer";
    }
  } else if (report.fast_path_equal && !*report.fast_path_equal) {
    result.fast_path_disagrees = true;
  }
  if (level == Level::elliptic) {
    const Completion c = elliptic_complete(elliptic_table(lambda, n));
    if (!(c.added_num == c.added_den)) {
      result.passed = false;
      result.problem = "completion adds unbalanced factors";
    }
  }
  return result;
}

std::vector<CaseResult> run_cases(
    Level level, const std::vector<std::pair<Partition, int>>& cases,
    unsigned jobs) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        results[k] = check_case(level, cases[k].first, cases[k].second);
      } catch (const std::exception& e) {
        results[k] = {cases[k].first, cases[k].second, false, false, e.what()};
      }
    }
  };
  if (jobs <= 1 || cases.size() < 2) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  reject_latex(format, "sweep");
  if (o.max_size < 0 || o.max_n < 0) {
    throw DomainError("sweep bounds must be non-negative");
  }
  std::vector<Level> levels;
  if (o.level.empty() || o.level == "all") {
    levels = {Level::integer, Level::polynomial, Level::elliptic};
  } else {
    levels = {parse_level(o.level)};
  }
  for (Level level : levels) {
    const SweepCaps caps = sweep_caps(to_string(level));
    if (o.max_size > caps.max_size || o.max_n > caps.max_n) {
      throw ResourceError("sweep " + std::to_string(o.max_size) + " " +
                          std::to_string(o.max_n) + " exceeds the " +
                          to_string(level) + " cap of " +
                          std::to_string(caps.max_size) + " " +
                          std::to_string(caps.max_n));
    }
  }

  std::vector<std::pair<Partition, int>> cases;
  for (const Partition& lambda : partitions_up_to(o.max_size)) {
    for (int n = std::max<int>(1, static_cast<int>(lambda.length()));
         n <= o.max_n; ++n) {
      cases.emplace_back(lambda, n);
    }
  }
  const unsigned jobs =
      o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  bool all_passed = true;
  Json report = Json::array();
  std::ostringstream text;
  for (Level level : levels) {
    const std::vector<CaseResult> results = run_cases(level, cases, jobs);
    std::size_t failed = 0;
    std::size_t disagreements = 0;
    Json failures = Json::array();
    Json fast_path = Json::array();
    for (const auto& r : results) {
      if (!r.passed) {
        ++failed;
        failures.push_back(
            {{"lambda", to_json(r.lambda)}, {"n", r.n}, {"problem", r.problem}});
        text << "FAIL " << to_string(level) << " " << r.lambda.to_string()
             << " n=" << r.n << ": " << r.problem << "\n";
      }
      if (r.fast_path_disagrees) {
        ++disagreements;
        fast_path.push_back({{"lambda", to_json(r.lambda)}, {"n", r.n}});
        text << "note " << to_string(level) << " " << r.lambda.to_string()
             << " n=" << r.n
             << ": cancelled multisets differ, expansion decides\n";
      }
    }
    all_passed = all_passed && failed == 0;
    text << to_string(level) << ": " << results.size() << " cases, "
         << results.size() - failed << " passed, " << failed << " failed";
    if (level != Level::integer) {
      text << ", " << disagreements << " fast-path disagreements";
    }
    text << "\n";
    report.push_back({{"level", to_string(level)},
                      {"cases", results.size()},
                      {"passed", results.size() - failed},
                      {"failed", failed},
                      {"failures", failures},
                      {"fast_path_disagreements", fast_path}});
  }
  if (format == Format::json) {
    out << Json{{"max_size", o.max_size},
                {"max_n", o.max_n},
                {"levels", report},
                {"all_passed", all_passed}}
               .dump(2)
        << "\n";
  } else {
    out << "sweep |lambda| <= " << o.max_size << ", n <= " << o.max_n << "\n"
        << text.str() << (all_passed ? "all passed" : "FAILURES") << "\n";
  }
  return all_passed ? ok : unequal;
}

// ------------------------------------------------------------------ table

int cmd_table(const Options& o, std::ostream& out) {
  const Partition lambda = Partition::parse(o.lambda);
  const int n = require_n(lambda, o.n);
  const Format format = parse_format(o.format);
  const Stage stage = parse_stage(o.stage);
  const EllipticTable table = elliptic_table(lambda, n);
  if (format == Format::ascii) {
    out << to_string(stage) << " factor table for " << lambda.to_string()
        << ", n = " << n << "\n";
  }
  out << render_table(table, stage, format);
  return ok;
}

// -------------------------------------------------------------- macdonald

int cmd_macdonald(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  reject_latex(format, "macdonald");
  const Partition lambda = Partition::parse(o.lambda);
  const SymFunc p = macdonald_p(lambda);
  std::optional<PrincipalCheck> check;
  int n = 0;
  if (o.n) {
    n = require_n(lambda, o.n);
    check = verify_principal_vs_elliptic(lambda, n);
  }

  if (format == Format::json) {
    Json j{{"lambda", to_json(lambda)}, {"P", to_json(p)}};
    if (check) {
      j["n"] = n;
      j["principal"] = to_json(check->principal);
      j["elliptic"] = to_json(check->elliptic);
      j["weight"] = check->weight;
      j["equal"] = check->equal;
      j["literal_equal"] = check->literal_equal;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "P" << lambda.to_string() << " in the monomial basis:\n";
    // Dominance-descending display: largest partition first.
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
      out << "  m" << it->first.to_string() << ": "
          << pretty(it->second.to_fraction()) << "\n";
    }
    if (check) {
      out << "principal specialization at n = " << n << ": "
          << pretty(check->principal) << "\n";
      out << "elliptic product:                  " << pretty(check->elliptic)
          << "\n";
      out << "n(lambda) = " << check->weight << "; specialization = t^"
          << check->weight << " * elliptic product: "
          << (check->equal ? "yes" : "no") << "\n";
      out << "specialization = elliptic product as written: "
          << (check->literal_equal ? "yes" : "no") << "\n";
    }
  }
  return !check || check->equal ? ok : unequal;
}

// ------------------------------------------------------------- specialize

struct Oracle {
  std::string name;
  std::map<Partition, Integer> coords;
};

std::optional<Oracle> oracle_for(const Partition& lambda, Locus locus) {
  const int d = static_cast<int>(lambda.size());
  switch (locus) {
    case Locus::q_equals_t:
      return Oracle{"Schur function via semistandard tableaux",
                    schur_ssyt(lambda, d).monomial_coordinates(d)};
    case Locus::t_equals_1:
      return Oracle{"monomial symmetric function", {{lambda, Integer(1)}}};
    case Locus::q_equals_1:
      return Oracle{"elementary product e of the conjugate partition",
                    elementary_expand(conjugate(lambda), d)
                        .monomial_coordinates(d)};
    default:
      return std::nullopt;
  }
}

int cmd_specialize(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  reject_latex(format, "specialize");
  const Partition lambda = Partition::parse(o.lambda);
  const Locus locus = parse_locus(o.locus);
  const SymFunc f = specialize_family(lambda, locus);
  const std::optional<Oracle> oracle =
      lambda.empty() ? std::nullopt : oracle_for(lambda, locus);

  bool agrees = true;
  if (oracle) {
    for (const Partition& mu : partitions_of(static_cast<int>(lambda.size()))) {
      const auto it = oracle->coords.find(mu);
      const Integer expected = it == oracle->coords.end() ? Integer(0) : it->second;
      if (!(f.coeff_fraction(mu) == QTFraction(IntPoly(expected)))) {
        agrees = false;
      }
    }
  }

  if (format == Format::json) {
    Json j{{"lambda", to_json(lambda)},
           {"at", to_string(locus)},
           {"coefficients", to_json(f)}};
    if (oracle) j["oracle"] = {{"name", oracle->name}, {"agrees", agrees}};
    out << j.dump(2) << "\n";
  } else {
    out << "P" << lambda.to_string() << " at " << to_string(locus)
        << " in the monomial basis:\n";
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
      out << "  m" << it->first.to_string() << ": "
          << pretty(it->second.to_fraction()) << "\n";
    }
    if (oracle) {
      out << "independent check (" << oracle->name
          << "): " << (agrees ? "agrees" : "DISAGREES") << "\n";
    }
  }
  return agrees ? ok : unequal;
}

// ----------------------------------------------------------------- wiring

void add_lambda(CLI::App* sub, Options& o) {
  sub->add_option("lambda,--lambda", o.lambda,
                  "partition, largest part first, e.g. 5,4,4,3,2")
      ->required();
}

void add_format(CLI::App* sub, Options& o, bool with_latex) {
  std::vector<std::string> formats{"ascii", "json"};
  if (with_latex) formats.push_back("latex");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(formats));
}

}  // namespace

SweepCaps sweep_caps(std::string_view level) {
  if (level == "integer") return {30, 16};
  if (level == "polynomial") return {14, 10};
  return {10, 8};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Hook/content product identities and Macdonald polynomials",
               "hookbox"};
  app.require_subcommand(1, 1);

  auto* diagram = app.add_subcommand("diagram", "draw a Young diagram");
  add_lambda(diagram, o);
  diagram->add_option("--overlay", o.overlay, "per-box statistic")
      ->check(CLI::IsMember({"none", "content", "hook", "arm-leg"}));
  add_format(diagram, o, true);

  auto* verify_cmd = app.add_subcommand("verify", "check one identity instance");
  verify_cmd->add_option("--level", o.level,
                        "integer, polynomial or elliptic (default)");
  add_lambda(verify_cmd, o);
  verify_cmd->add_option("n,--n", o.n, "number of variables (default: length)");
  add_format(verify_cmd, o, false);

  auto* sweep = app.add_subcommand("sweep", "check every instance up to bounds");
  sweep->add_option("max_size", o.max_size, "largest |lambda|")->required();
  sweep->add_option("max_n", o.max_n, "largest n")->required();
  sweep->add_option("level,--level", o.level,
                    "integer, polynomial, elliptic or all (default)");
  sweep->add_option("--jobs", o.jobs, "worker threads (default: all cores)");
  add_format(sweep, o, false);

  auto* table = app.add_subcommand("table", "elliptic factor table");
  add_lambda(table, o);
  table->add_option("n,--n", o.n, "number of variables (default: length)");
  table->add_option("stage,--stage", o.stage, "table stage")
      ->check(CLI::IsMember({"raw", "cancelled", "reversed", "completed"}));
  add_format(table, o, true);

  auto* macdonald = app.add_subcommand("macdonald", "Macdonald P in monomials");
  add_lambda(macdonald, o);
  macdonald->add_option("--n", o.n,
                        "also compare the principal specialization");
  add_format(macdonald, o, false);

  auto* specialize = app.add_subcommand("specialize", "classical degenerations");
  add_lambda(specialize, o);
  specialize->add_option("--at", o.locus, "q=t, t=1, q=1, q=0 or t=0")
      ->required();
  add_format(specialize, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? ok : bad_input;
  }

  try {
    if (diagram->parsed()) return cmd_diagram(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (macdonald->parsed()) return cmd_macdonald(o, out);
    if (specialize->parsed()) return cmd_specialize(o, out);
  } catch (const ResourceError& e) {
    err << "hookbox: " << e.what() << "\n";
    return over_cap;
  } catch (const PoleError& e) {
    err << "hookbox: " << e.what() << "\n";
    return unequal;
  } catch (const DomainError& e) {
    err << "hookbox: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    err << "hookbox: internal error: " << e.what() << "\n";
    return unequal;
  }
  return bad_input;
}

}  // namespace hookbox::cli
