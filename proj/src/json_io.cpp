#include "hookbox/json_io.hpp"

namespace hookbox {

namespace {

Json factors_to_json(const FactorMultiset& m) {
  Json out = Json::array();
  for (const auto& f : m.elements()) out.push_back({f.a, f.b});
  return out;
}

FactorMultiset factors_from_json(const Json& j) {
  FactorMultiset out;
  for (const auto& pair : j) {
    out.add({pair.at(0).get<std::uint32_t>(), pair.at(1).get<std::uint32_t>()});
  }
  return out;
}

Json entry_to_json(const TableEntry& e) {
  Json out;
  out["row"] = e.box.row;
  out["col"] = e.box.col;
  out["num"] = e.num ? Json{e.num->a, e.num->b} : Json(nullptr);
  out["den"] = e.den ? Json{e.den->a, e.den->b} : Json(nullptr);
  out["num_added"] = e.num_added;
  out["den_added"] = e.den_added;
  return out;
}

}  // namespace

Json to_json(const IntPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"q", m.q}, {"t", m.t}, {"c", c.get_str()}});
  }
  return {{"terms", terms}};
}

IntPoly intpoly_from_json(const Json& j) {
  std::vector<IntPoly::Term> terms;
  for (const auto& term : j.at("terms")) {
    Integer c;
    if (c.set_str(term.at("c").get<std::string>(), 10) != 0) {
      throw DomainError("bad coefficient in polynomial JSON");
    }
    terms.emplace_back(Monomial{term.at("q").get<std::uint32_t>(),
                                term.at("t").get<std::uint32_t>()},
                       std::move(c));
  }
  return IntPoly::from_terms(std::move(terms));
}

Json to_json(const FactorBag& bag) {
  return {{"num", factors_to_json(bag.num)}, {"den", factors_to_json(bag.den)}};
}

FactorBag factor_bag_from_json(const Json& j) {
  return {factors_from_json(j.at("num")), factors_from_json(j.at("den"))};
}

Json to_json(const QTFraction& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

QTFraction fraction_from_json(const Json& j) {
  return {intpoly_from_json(j.at("num")), intpoly_from_json(j.at("den"))};
}

Json to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0) {
    throw DomainError("bad rational in JSON");
  }
  r.canonicalize();
  return r;
}

Json to_json(const Partition& lambda) {
  return Json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const IdentityReport& report) {
  Json out;
  out["level"] = to_string(report.level);
  out["lambda"] = to_json(report.lambda);
  out["n"] = report.n;
  out["equal"] = report.equal;
  auto side = [](const auto& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
  };
  out["lhs"] = side(report.lhs);
  out["rhs"] = side(report.rhs);
  if (report.fast_path_equal) out["fast_path_equal"] = *report.fast_path_equal;
  return out;
}

Json to_json(const SymFunc& f) {
  Json coeffs = Json::array();
  for (const auto& [mu, c] : f.coeffs) {
    const QTFraction value = c.to_fraction();
    coeffs.push_back({{"mu", to_json(mu)},
                      {"num", to_json(value.num())},
                      {"den", to_json(value.den())}});
  }
  return {{"degree", f.degree}, {"basis", to_string(f.basis)}, {"coeffs", coeffs}};
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f;
  f.degree = j.at("degree").get<int>();
  const auto basis = j.at("basis").get<std::string>();
  if (basis != "monomial") {
    throw DomainError("only monomial-basis symmetric functions are read");
  }
  for (const auto& entry : j.at("coeffs")) {
    const QTFraction value(intpoly_from_json(entry.at("num")),
                           intpoly_from_json(entry.at("den")));
    f.set(partition_from_json(entry.at("mu")),
          FactoredFraction::from_fraction(value));
  }
  return f;
}

Json to_json(const EllipticTable& table) {
  Json cells = Json::array();
  for (const auto& cell : table.cells) {
    Json raw = Json::array();
    for (std::size_t k = 0; k < cell.js.size(); ++k) {
      const auto& [num, den] = cell.raw_factors[k];
      raw.push_back({{"j", cell.js[k]},
                     {"num", {num.a, num.b}},
                     {"den", {den.a, den.b}}});
    }
    cells.push_back({{"row", cell.row},
                     {"col", cell.col},
                     {"r", cell.r},
                     {"raw", raw},
                     {"cancelled", to_json(cell.cancelled)}});
  }
  return {{"lambda", to_json(table.lambda)}, {"n", table.n}, {"cells", cells}};
}

Json to_json(const Completion& completion) {
  Json entries = Json::array();
  for (const auto& e : completion.entries) entries.push_back(entry_to_json(e));
  return {{"entries", entries},
          {"added_num", factors_to_json(completion.added_num)},
          {"added_den", factors_to_json(completion.added_den)},
          {"balanced", completion.added_num == completion.added_den},
          {"shapes_match", completion.shapes_match}};
}

}  // namespace hookbox
