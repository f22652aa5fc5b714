#include "hookbox/identities.hpp"

#include <stdexcept>

namespace hookbox {

namespace {

void require_n(const Partition& lambda, int n) {
  if (n < static_cast<int>(lambda.length())) {
    throw DomainError("n = " + std::to_string(n) +
                      " is smaller than the length of " + lambda.to_string());
  }
}

std::uint32_t u32(int v) { return static_cast<std::uint32_t>(v); }

int row_of(const Partition& lambda, int i) {
  return lambda.row(static_cast<std::size_t>(i));
}

}  // namespace

std::string to_string(Level level) {
  switch (level) {
    case Level::integer:
      return "integer";
    case Level::polynomial:
      return "polynomial";
    case Level::elliptic:
      return "elliptic";
  }
  return "?";
}

Level parse_level(std::string_view text) {
  if (text == "integer") return Level::integer;
  if (text == "polynomial") return Level::polynomial;
  if (text == "elliptic") return Level::elliptic;
  throw DomainError("unknown level '" + std::string(text) + "'");
}

namespace {

// GMP's rational arithmetic expects canonical operands.
Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational integer_lhs(const Partition& lambda, int n) {
  require_n(lambda, n);
  Rational value = 1;
  for (const BoxCoord& b : boxes(lambda)) {
    const BoxStats s = box_stats(lambda, b);
    value *= ratio(n + s.content, s.hook);
  }
  return value;
}

Rational integer_rhs(const Partition& lambda, int n) {
  require_n(lambda, n);
  Rational value = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      value *= ratio(row_of(lambda, i) - row_of(lambda, j) + j - i, j - i);
    }
  }
  return value;
}

FactorBag poly_lhs(const Partition& lambda, int n) {
  require_n(lambda, n);
  FactorBag bag;
  for (const BoxCoord& b : boxes(lambda)) {
    const BoxStats s = box_stats(lambda, b);
    bag.num.add({0, u32(n + s.content)});
    bag.den.add({0, u32(s.hook)});
  }
  return bag;
}

FactorBag poly_rhs(const Partition& lambda, int n) {
  require_n(lambda, n);
  FactorBag bag;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bag.num.add({0, u32(row_of(lambda, i) - row_of(lambda, j) + j - i)});
      bag.den.add({0, u32(j - i)});
    }
  }
  return bag;
}

FactorBag elliptic_lhs(const Partition& lambda, int n) {
  require_n(lambda, n);
  FactorBag bag;
  for (const BoxCoord& b : boxes(lambda)) {
    const BoxStats s = box_stats(lambda, b);
    bag.num.add({u32(s.coarm), u32(n - s.coleg)});
    bag.den.add({u32(s.arm), u32(s.leg + 1)});
  }
  return bag;
}

FactorBag elliptic_rhs(const Partition& lambda, int n) {
  require_n(lambda, n);
  FactorBag bag;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int r = 0; r < row_of(lambda, i) - row_of(lambda, j); ++r) {
        bag.num.add({u32(r), u32(j - i + 1)});
        bag.den.add({u32(r), u32(j - i)});
      }
    }
  }
  return bag;
}

const EllipticCell* EllipticTable::find(int row, int col) const {
  for (const auto& cell : cells) {
    if (cell.row == row && cell.col == col) return &cell;
  }
  return nullptr;
}

EllipticTable elliptic_table(const Partition& lambda, int n) {
  require_n(lambda, n);
  EllipticTable table{lambda, n, {}};
  for (int i = 1; i <= n; ++i) {
    const int li = row_of(lambda, i);
    // Columns left to right means r from λ_i − 1 down to 0.
    for (int col = 1; col <= li; ++col) {
      const int r = li - col;
      EllipticCell cell;
      cell.row = i;
      cell.col = col;
      cell.r = u32(r);
      FactorBag product;
      for (int j = n; j > i; --j) {
        if (li - row_of(lambda, j) <= r) continue;
        const QTFactor num{u32(r), u32(j - i + 1)};
        const QTFactor den{u32(r), u32(j - i)};
        cell.js.push_back(j);
        cell.raw_factors.emplace_back(num, den);
        product.num.add(num);
        product.den.add(den);
      }
      if (cell.js.empty()) continue;
      cell.cancelled = bag_cancel(product);
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

FactorBag table_product(const EllipticTable& table) {
  FactorBag bag;
  for (const auto& cell : table.cells) {
    for (const auto& [num, den] : cell.raw_factors) {
      bag.num.add(num);
      bag.den.add(den);
    }
  }
  return bag;
}

std::vector<TableEntry> reversed_table(const EllipticTable& table) {
  std::vector<TableEntry> entries;
  for (const BoxCoord& b : boxes(table.lambda)) {
    TableEntry e;
    e.box = b;
    entries.push_back(e);
  }
  auto entry_at = [&](int row, int col) -> TableEntry& {
    for (auto& e : entries) {
      if (e.box.row == row && e.box.col == col) return e;
    }
    throw std::logic_error("factor table cell outside the diagram");
  };
  for (const auto& cell : table.cells) {
    for (const auto& [f, count] : cell.cancelled.num.items()) {
      for (std::size_t k = 0; k < count; ++k) {
        TableEntry& target = entry_at(cell.row, static_cast<int>(f.a) + 1);
        if (target.num) throw std::logic_error("two numerators in one box");
        target.num = f;
      }
    }
    for (const auto& [f, count] : cell.cancelled.den.items()) {
      for (std::size_t k = 0; k < count; ++k) {
        TableEntry& target = entry_at(cell.row, cell.col);
        if (target.den) throw std::logic_error("two denominators in one box");
        target.den = f;
      }
    }
  }
  return entries;
}

Completion elliptic_complete(const EllipticTable& table) {
  Completion out;
  out.entries = reversed_table(table);
  for (TableEntry& e : out.entries) {
    const BoxStats s = box_stats(table.lambda, e.box);
    const QTFactor want_num{u32(s.coarm), u32(table.n - s.coleg)};
    const QTFactor want_den{u32(s.arm), u32(s.leg + 1)};
    if (!e.num) {
      e.num = want_num;
      e.num_added = true;
      out.added_num.add(want_num);
    } else if (*e.num != want_num) {
      out.shapes_match = false;
    }
    if (!e.den) {
      e.den = want_den;
      e.den_added = true;
      out.added_den.add(want_den);
    } else if (*e.den != want_den) {
      out.shapes_match = false;
    }
  }
  return out;
}

FactorBag completed_product(const Completion& completion) {
  FactorBag bag;
  for (const auto& e : completion.entries) {
    if (e.num) bag.num.add(*e.num);
    if (e.den) bag.den.add(*e.den);
  }
  return bag;
}

IdentityReport verify(Level level, const Partition& lambda, int n) {
  IdentityReport report;
  report.level = level;
  report.lambda = lambda;
  report.n = n;
  if (level == Level::integer) {
    const Rational lhs = integer_lhs(lambda, n);
    const Rational rhs = integer_rhs(lambda, n);
    report.equal = lhs == rhs;
    report.lhs = lhs;
    report.rhs = rhs;
    return report;
  }
  FactorBag lhs =
      level == Level::polynomial ? poly_lhs(lambda, n) : elliptic_lhs(lambda, n);
  FactorBag rhs =
      level == Level::polynomial ? poly_rhs(lambda, n) : elliptic_rhs(lambda, n);
  report.fast_path_equal = bag_cancel(lhs) == bag_cancel(rhs);
  report.equal = frac_eq(bag_expand(lhs), bag_expand(rhs));
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

}  // namespace hookbox
