#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "detail/combinations.hpp"
#include "signrank/errors.hpp"
#include "signrank/generators.hpp"

namespace signrank {

namespace {

constexpr std::size_t kMaxHeavyD = 8;

std::size_t zero_budget(std::size_t d) {
  if (d == 3) return 1;
  if (d >= 5 && d <= kMaxHeavyD) return 2;
  throw InputError("heavy-dominant patterns are defined for d = 3 and 5 <= d <= " + std::to_string(kMaxHeavyD));
}

// Rows grouped by their zero set on a fixed column subset, and a capacitated
// bipartite matching of the pattern rows into them.
class PatternMatcher {
 public:
  PatternMatcher(std::size_t k, std::size_t z) : k_(k) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) <= z) patterns_.push_back(mask);
    }
    rows_of_.resize(std::size_t{1} << k);
  }

  std::size_t pattern_count() const noexcept { return patterns_.size(); }

  void reset() {
    for (auto t : used_types_) rows_of_[t].clear();
    used_types_.clear();
  }

  void add_row(std::uint32_t zero_mask, std::size_t row) {
    if (rows_of_[zero_mask].empty()) used_types_.push_back(zero_mask);
    rows_of_[zero_mask].push_back(row);
  }

  /// Rows of a full matching, or empty if none exists.
  std::vector<std::size_t> match() {
    std::size_t usable = 0;
    for (auto t : used_types_) {
      if (static_cast<std::size_t>(std::popcount(t)) <= max_zeros()) usable += rows_of_[t].size();
    }
    if (usable < patterns_.size() || rows_of_[0].empty()) return {};

    assigned_.assign(patterns_.size(), kNone);
    load_.assign(std::size_t{1} << k_, 0);
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      visited_.assign(std::size_t{1} << k_, 0);
      if (!augment(p)) return {};
    }
    std::vector<std::size_t> out;
    std::vector<std::size_t> taken(std::size_t{1} << k_, 0);
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      const auto t = assigned_[p];
      out.push_back(rows_of_[t][taken[t]++]);
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::size_t max_zeros() const noexcept { return static_cast<std::size_t>(std::popcount(patterns_.back())); }

  bool augment(std::size_t p) {
    const std::uint32_t zp = patterns_[p];
    for (auto t : used_types_) {
      if ((t & ~zp) != 0 || visited_[t]) continue;
      visited_[t] = 1;
      if (load_[t] < rows_of_[t].size()) {
        ++load_[t];
        assigned_[p] = t;
        return true;
      }
      for (std::size_t q = 0; q < patterns_.size(); ++q) {
        if (assigned_[q] != t) continue;
        if (augment(q)) {
          assigned_[p] = t;
          return true;
        }
      }
    }
    return false;
  }

  std::size_t k_;
  std::vector<std::uint32_t> patterns_;
  std::vector<std::vector<std::size_t>> rows_of_;
  std::vector<std::uint32_t> used_types_;
  std::vector<std::uint32_t> assigned_;
  std::vector<std::size_t> load_;
  std::vector<char> visited_;
};

void check_subsets(std::size_t cols, std::size_t k) {
  if (binomial(cols, k) > SearchLimits{}.max_subsets_per_level) {
    throw SizeLimitError("heavy-dominant search over " + std::to_string(k) + "-column subsets is too large");
  }
}

std::uint32_t zero_mask(const std::vector<std::uint8_t>& b, std::size_t cols, std::size_t r,
                        const std::vector<std::size_t>& q) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!b[r * cols + q[i]]) mask |= 1u << i;
  }
  return mask;
}

}  // namespace

double heavy_free_probability(std::size_t n, std::size_t d) {
  zero_budget(d);
  if (n == 0) throw InputError("heavy_free_probability needs N >= 1");
  const double nn = static_cast<double>(n);
  if (d == 3) return 1.0 / (2.0 * std::pow(nn, 7.0 / 15.0));
  const double dd = static_cast<double>(d);
  const double exponent = (dd * dd + 5.0 * dd + 2.0) / (dd * dd * dd + 2.0 * dd * dd + 3.0 * dd);
  return 1.0 / (2.0 * std::pow(nn, exponent));
}

bool contains_heavy_dominant(const BooleanMatrix& b, std::size_t d) {
  const std::size_t z = zero_budget(d);
  const std::size_t k = d + 1;
  if (b.cols() < k) return false;
  check_subsets(b.cols(), k);
  PatternMatcher matcher(k, z);
  if (b.rows() < matcher.pattern_count()) return false;
  auto q = detail::first_combination(k);
  do {
    matcher.reset();
    for (std::size_t r = 0; r < b.rows(); ++r) matcher.add_row(zero_mask(b.entries(), b.cols(), r, q), r);
    if (!matcher.match().empty()) return true;
  } while (detail::next_combination(q, b.cols()));
  return false;
}

HeavyFreeResult heavy_dominant_free_random(std::size_t n, std::size_t d, std::mt19937_64& rng,
                                           std::optional<double> probability) {
  const std::size_t z = zero_budget(d);
  if (n == 0) throw InputError("heavy_dominant_free_random needs N >= 1");
  const std::size_t limit = (d == 3) ? 40 : 25;
  if (n > limit) {
    throw SizeLimitError("heavy_dominant_free_random supports N <= " + std::to_string(limit) + " for d = " +
                         std::to_string(d));
  }
  HeavyFreeLog log;
  log.probability = probability ? *probability : heavy_free_probability(n, d);
  if (!(log.probability >= 0.0 && log.probability <= 1.0)) throw InputError("probability must lie in [0, 1]");

  std::bernoulli_distribution one(log.probability);
  std::vector<std::uint8_t> b(n * n);
  for (auto& v : b) v = one(rng) ? 1 : 0;
  log.ones_sampled = static_cast<std::size_t>(std::count(b.begin(), b.end(), 1));

  const std::size_t k = d + 1;
  if (n >= k) {
    PatternMatcher matcher(k, z);
    auto q = detail::first_combination(k);
    do {
      for (;;) {
        matcher.reset();
        for (std::size_t r = 0; r < n; ++r) matcher.add_row(zero_mask(b, n, r, q), r);
        const auto rows = matcher.match();
        if (rows.empty()) break;
        // Push the matched row with the most zeros past the pattern budget.
        std::size_t victim = rows.front();
        int most = -1;
        for (auto r : rows) {
          const int zeros = std::popcount(zero_mask(b, n, r, q));
          if (zeros > most || (zeros == most && r < victim)) {
            most = zeros;
            victim = r;
          }
        }
        ++log.occurrences;
        std::size_t zeros = static_cast<std::size_t>(most);
        for (std::size_t i = 0; i < k && zeros <= z; ++i) {
          auto& cell = b[victim * n + q[i]];
          if (cell) {
            cell = 0;
            ++zeros;
            ++log.zeros_applied;
          }
        }
      }
    } while (detail::next_combination(q, n));
  }
  log.ones_final = static_cast<std::size_t>(std::count(b.begin(), b.end(), 1));
  return {to_signed(BooleanMatrix(n, n, std::move(b))), log};
}

}  // namespace signrank
