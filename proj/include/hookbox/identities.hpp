// Both sides of the hook/content product identities at the integer,
// polynomial (q-free) and elliptic (q,t) levels, plus the factor-table
// rearrangement that turns the elliptic right-hand side into the left.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hookbox/factor_bag.hpp"
#include "hookbox/partition.hpp"

namespace hookbox {

enum class Level { integer, polynomial, elliptic };

std::string to_string(Level level);
/// "integer" | "polynomial" | "elliptic"; throws DomainError otherwise.
Level parse_level(std::string_view text);

/// Π_{b∈λ} (n + c(b)) / h(b).
Rational integer_lhs(const Partition& lambda, int n);
/// Π_{1≤i<j≤n} (λ_i − λ_j + j − i) / (j − i), λ zero-padded to n parts.
Rational integer_rhs(const Partition& lambda, int n);

/// {(0, n + c(b))} / {(0, h(b))} over boxes.
FactorBag poly_lhs(const Partition& lambda, int n);
/// {(0, λ_i − λ_j + j − i)} / {(0, j − i)} over pairs i < j ≤ n.
FactorBag poly_rhs(const Partition& lambda, int n);

/// {(coarm, n − coleg)} / {(arm, leg + 1)} over boxes.
FactorBag elliptic_lhs(const Partition& lambda, int n);
/// Π_{i<j} Π_{r=0}^{λ_i−λ_j−1} (r, j−i+1) / (r, j−i).
FactorBag elliptic_rhs(const Partition& lambda, int n);

/// All right-hand-side factors sharing row i and q-exponent r. The cell sits
/// in column λ_i − r of row i.
struct EllipticCell {
  int row = 1;
  int col = 1;
  std::uint32_t r = 0;
  /// One entry per j with λ_i − λ_j > r, listed from j = n downwards.
  std::vector<int> js;
  /// ((r, j−i+1), (r, j−i)) for each entry of js.
  std::vector<std::pair<QTFactor, QTFactor>> raw_factors;
  /// Telescoped form: one numerator and one denominator factor.
  FactorBag cancelled;
};

struct EllipticTable {
  Partition lambda;
  int n = 0;
  /// Row-major, columns increasing within a row.
  std::vector<EllipticCell> cells;

  const EllipticCell* find(int row, int col) const;
};

EllipticTable elliptic_table(const Partition& lambda, int n);
/// Product of every raw factor in the table (equals elliptic_rhs).
FactorBag table_product(const EllipticTable& table);

/// One box of the rearranged table. Absent factors stand for 1.
struct TableEntry {
  BoxCoord box;
  std::optional<QTFactor> num;
  std::optional<QTFactor> den;
  bool num_added = false;
  bool den_added = false;
};

/// Numerators of each row moved so the one with q-exponent r sits in column
/// r + 1; denominators stay in their cells. One entry per box of λ.
std::vector<TableEntry> reversed_table(const EllipticTable& table);

struct Completion {
  std::vector<TableEntry> entries;
  FactorMultiset added_num;
  FactorMultiset added_den;
  /// Every factor already present matched the box's left-hand-side shape.
  bool shapes_match = true;
};

/// Fills every missing numerator with (coarm, n − coleg) and every missing
/// denominator with (arm, leg + 1).
Completion elliptic_complete(const EllipticTable& table);
FactorBag completed_product(const Completion& completion);

struct IdentityReport {
  Level level = Level::integer;
  Partition lambda;
  int n = 0;
  std::variant<Rational, FactorBag> lhs;
  std::variant<Rational, FactorBag> rhs;
  bool equal = false;
  /// Bags only: cancelled factor multisets coincide.
  std::optional<bool> fast_path_equal;
};

/// Integer level compares exact rationals. The bag levels compare the
/// cancelled multisets (fast path) and the expanded fractions by
/// cross-multiplication; `equal` is the expansion result.
IdentityReport verify(Level level, const Partition& lambda, int n);

}  // namespace hookbox
