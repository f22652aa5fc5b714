#include "hookbox/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hookbox {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) {
      throw DomainError("partition parts must be positive");
    }
    if (k + 1 < parts.size() && parts[k] < parts[k + 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
}

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') continue;
    cleaned.push_back(c);
  }
  std::vector<int> parts;
  if (cleaned.empty() || cleaned == "0") return Partition{};
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    std::size_t comma = cleaned.find(',', pos);
    if (comma == std::string::npos) comma = cleaned.size();
    std::string_view item(cleaned.data() + pos, comma - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw DomainError("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_csv() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::vector<BoxCoord> boxes(const Partition& lambda) {
  std::vector<BoxCoord> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      out.push_back({static_cast<int>(i), j});
    }
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lambda.row(1)), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool contains(const Partition& lambda, BoxCoord b) {
  return b.row >= 1 && b.col >= 1 &&
         static_cast<std::size_t>(b.row) <= lambda.length() &&
         b.col <= lambda.row(static_cast<std::size_t>(b.row));
}

BoxStats box_stats(const Partition& lambda, BoxCoord b) {
  if (!contains(lambda, b)) {
    throw DomainError("box (" + std::to_string(b.row) + "," +
                      std::to_string(b.col) + ") is not in " +
                      lambda.to_string());
  }
  int column_height = 0;
  while (static_cast<std::size_t>(column_height) < lambda.length() &&
         lambda.row(static_cast<std::size_t>(column_height) + 1) >= b.col) {
    ++column_height;
  }
  BoxStats s;
  s.arm = lambda.row(static_cast<std::size_t>(b.row)) - b.col;
  s.leg = column_height - b.row;
  s.coarm = b.col - 1;
  s.coleg = b.row - 1;
  s.content = s.coarm - s.coleg;
  s.hook = s.arm + s.leg + 1;
  return s;
}

int weighted_size(const Partition& lambda) {
  int total = 0;
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    total += static_cast<int>(i - 1) * lambda.row(i);
  }
  return total;
}

std::vector<int> row_ladder(const Partition& lambda, int n, int i) {
  if (n < static_cast<int>(lambda.length())) {
    throw DomainError("n = " + std::to_string(n) +
                      " is smaller than the length of " + lambda.to_string());
  }
  if (i < 1 || i > n) {
    throw DomainError("row index " + std::to_string(i) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  const auto row = static_cast<std::size_t>(i);
  std::vector<int> out;
  for (int j = 1; j <= lambda.row(row); ++j) {
    out.push_back(box_stats(lambda, {i, j}).hook);
  }
  for (int j = i + 1; j <= n; ++j) {
    out.push_back(lambda.row(row) - lambda.row(static_cast<std::size_t>(j)) +
                  j - i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int sum_mu = 0;
  int sum_lambda = 0;
  const std::size_t len = std::max(mu.length(), lambda.length());
  for (std::size_t k = 1; k <= len; ++k) {
    sum_mu += mu.row(k);
    sum_lambda += lambda.row(k);
    if (sum_mu > sum_lambda) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> prefix;
  generate(d, d, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d) {
    auto level = partitions_of(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t distinct_rearrangements(const Partition& lambda, int nvars) {
  if (static_cast<int>(lambda.length()) > nvars) return 0;
  // nvars! / (Π m_k! · zeros!)
  std::vector<int> counts;
  for (std::size_t k = 0; k < lambda.length();) {
    std::size_t run = k;
    while (run < lambda.length() && lambda.parts()[run] == lambda.parts()[k]) {
      ++run;
    }
    counts.push_back(static_cast<int>(run - k));
    k = run;
  }
  counts.push_back(nvars - static_cast<int>(lambda.length()));
  std::uint64_t result = 1;
  int placed = 0;
  for (int c : counts) {
    // multiply by C(placed + c, c)
    for (int k = 1; k <= c; ++k) {
      result = result * static_cast<std::uint64_t>(placed + k) /
               static_cast<std::uint64_t>(k);
    }
    placed += c;
  }
  return result;
}

}  // namespace hookbox
