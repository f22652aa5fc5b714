// Seeded random partitions for property tests.
#pragma once

#include <algorithm>
#include <random>

#include "hookbox/partition.hpp"

namespace hookbox::testing {

/// A uniformly chosen size in [0, max_size], then parts drawn greedily.
inline Partition random_partition(std::mt19937& rng, int max_size) {
  int remaining = std::uniform_int_distribution<int>(0, max_size)(rng);
  std::vector<int> parts;
  while (remaining > 0) {
    const int cap = parts.empty() ? remaining : std::min(remaining, parts.back());
    const int part = std::uniform_int_distribution<int>(1, cap)(rng);
    parts.push_back(part);
    remaining -= part;
  }
  return Partition(parts);
}

}  // namespace hookbox::testing
