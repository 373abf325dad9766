#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace signrank {

/// Exhaustive census over all non-empty classes C of {+-1}^N.
struct CensusResult {
  std::size_t n = 0;
  std::size_t d = 0;
  /// Classes of VC dimension exactly d.
  std::uint64_t count_exact = 0;
  /// Classes of VC dimension at most d.
  std::uint64_t count_at_most = 0;
  /// Classes of VC dimension d and size sauer_bound(N, d).
  std::uint64_t maximum_count = 0;
  bool all_maximum_connected = true;
  /// Number of classes for every VC dimension 0..N.
  std::vector<std::uint64_t> by_vc;
};

/// N <= 4 (2^{2^N} - 1 classes).
CensusResult enumerate_census(std::size_t n, std::size_t d);

struct CensusEstimate {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t class_size = 0;
  std::size_t samples = 0;
  std::size_t hits = 0;
  /// Fraction of sampled classes with VC dimension at most d.
  double fraction = 0.0;
  /// Two-sided 95% Hoeffding radius sqrt(ln(40) / (2 samples)).
  double radius = 0.0;
};

/// Monte Carlo estimate over uniformly drawn classes of a fixed size. N <= 16.
CensusEstimate sample_census(std::size_t n, std::size_t d, std::size_t class_size, std::size_t samples,
                             std::mt19937_64& rng);

}  // namespace signrank
