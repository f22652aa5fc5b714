// Partitions, box diagrams and per-box statistics.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookbox {

/// Raised when an argument lies outside an operation's domain
/// (out-of-diagram box, n smaller than the partition length, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Parses "5,4,4,3,2". Surrounding parentheses and blanks are accepted;
  /// "", "()" and "0" give the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Row length with zero padding: 0 for rows beyond length(). 1-based.
  int row(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  /// Multiplicity of part value k.
  int multiplicity(int k) const;

  std::string to_string() const;  // "(5,4,4,3,2)"
  std::string to_csv() const;      // "5,4,4,3,2"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// 1-based box coordinate.
struct BoxCoord {
  int row = 1;
  int col = 1;
  friend bool operator==(const BoxCoord&, const BoxCoord&) = default;
  friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

struct BoxStats {
  int content = 0;
  int hook = 1;
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
  friend bool operator==(const BoxStats&, const BoxStats&) = default;
};

/// All boxes of the diagram in row-major order.
std::vector<BoxCoord> boxes(const Partition& lambda);

/// Column lengths of the diagram.
Partition conjugate(const Partition& lambda);

bool contains(const Partition& lambda, BoxCoord b);

/// Throws DomainError when b is not a box of lambda.
BoxStats box_stats(const Partition& lambda, BoxCoord b);

/// n(λ) = Σ (i-1) λ_i, the sum of colegs over all boxes.
int weighted_size(const Partition& lambda);

/// Hook lengths of row i together with the gaps λ_i − λ_j + j − i for
/// i < j ≤ n (λ zero-padded to n parts), sorted ascending. The result is
/// always {1, 2, ..., λ_i + n − i}. Throws DomainError when n < length(λ)
/// or i is outside [1, n].
std::vector<int> row_ladder(const Partition& lambda, int n, int i);

/// Dominance: mu ⪯ lambda iff |mu| = |lambda| and every partial sum of mu is
/// at most the corresponding partial sum of lambda.
bool dominated_by(const Partition& mu, const Partition& lambda);

/// Partitions of d in decreasing lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d);

/// All partitions with size <= max_size, ordered by size and then by
/// decreasing lexicographic order.
std::vector<Partition> partitions_up_to(int max_size);

/// Number of distinct rearrangements of the parts of lambda padded with
/// zeros to nvars entries (0 when length > nvars).
std::uint64_t distinct_rearrangements(const Partition& lambda, int nvars);

}  // namespace hookbox
