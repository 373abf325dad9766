#include "signrank/vc.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>

#include "detail/combinations.hpp"
#include "signrank/errors.hpp"

namespace signrank {

namespace {

// Exhaustive occupancy tables are only built up to this width; wider sets
// cannot be (antipodally) shattered by any matrix we can hold in memory.
constexpr std::size_t kMaxPatternBits = 30;

void check_range(const SignMatrix& s, const ColumnSet& cols) {
  for (auto c : cols) {
    if (c >= s.cols()) {
      throw InputError("column index " + std::to_string(c) + " out of range for " +
                       std::to_string(s.cols()) + " columns");
    }
  }
}

// Counts distinct restricted patterns, folding v and -v together when
// antipodal is set. Stops early once `target` classes are seen.
std::uint64_t count_patterns(const SignMatrix& s, std::span<const std::size_t> cols, bool antipodal,
                             detail::Occupancy& occ, std::uint64_t target) {
  const std::size_t k = cols.size();
  const std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  const std::uint64_t top = std::uint64_t{1} << (k - 1);
  occ.clear();
  for (std::size_t r = 0; r < s.rows(); ++r) {
    std::uint64_t key = detail::project_row(s, r, cols);
    if (antipodal && (key & top)) key = ~key & mask;
    if (occ.insert(key) && occ.count() == target) break;
  }
  return occ.count();
}

bool shattered_impl(const SignMatrix& s, std::span<const std::size_t> cols, detail::Occupancy& occ) {
  const std::uint64_t target = std::uint64_t{1} << cols.size();
  return count_patterns(s, cols, false, occ, target) == target;
}

bool antipodal_impl(const SignMatrix& s, std::span<const std::size_t> cols, detail::Occupancy& occ) {
  const std::uint64_t target = std::uint64_t{1} << (cols.size() - 1);
  return count_patterns(s, cols, true, occ, target) == target;
}

void check_level(std::size_t n, std::size_t k, const SearchLimits& limits) {
  std::uint64_t subsets = 0;
  try {
    subsets = binomial(n, k);
  } catch (const SizeLimitError&) {
    subsets = ~std::uint64_t{0};
  }
  if (subsets > limits.max_subsets_per_level) {
    throw SizeLimitError("exhaustive search over " + std::to_string(k) + "-subsets of " +
                         std::to_string(n) + " columns exceeds the configured limit");
  }
}

// Largest k (up to max_k) such that some k-subset satisfies pred; subset
// monotonicity of both shattering notions makes the early exit sound.
template <class Pred>
ColumnSet search_largest(const SignMatrix& s, std::size_t max_k, const SearchLimits& limits, Pred pred) {
  ColumnSet best;
  for (std::size_t k = 1; k <= max_k; ++k) {
    check_level(s.cols(), k, limits);
    detail::Occupancy occ(k);
    std::optional<std::vector<std::size_t>> hit;
    auto idx = detail::first_combination(k);
    do {
      if (pred(idx, occ)) {
        hit = idx;
        break;
      }
    } while (detail::next_combination(idx, s.cols()));
    if (!hit) break;
    best = ColumnSet(*hit);
  }
  return best;
}

std::size_t floor_log2(std::uint64_t x) {
  std::size_t r = 0;
  while (x > 1) {
    x >>= 1;
    ++r;
  }
  return r;
}

}  // namespace

ColumnSet::ColumnSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InputError("column set contains a repeated index");
  }
}

ColumnSet ColumnSet::all(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return ColumnSet(std::move(v));
}

bool ColumnSet::contains(std::size_t c) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), c);
}

ConceptClass::ConceptClass(SignMatrix m) : matrix_(std::move(m)) {
  if (!has_distinct_rows(matrix_)) throw InputError("concept class rows must be pairwise distinct");
}

bool is_shattered(const SignMatrix& s, const ColumnSet& cols) {
  check_range(s, cols);
  if (cols.empty()) return true;
  if (cols.size() > kMaxPatternBits || (std::uint64_t{1} << cols.size()) > s.rows()) return false;
  detail::Occupancy occ(cols.size());
  return shattered_impl(s, cols.indices(), occ);
}

bool is_antipodally_shattered(const SignMatrix& s, const ColumnSet& cols) {
  check_range(s, cols);
  if (cols.empty()) return true;
  if (cols.size() > kMaxPatternBits + 1 || (std::uint64_t{1} << (cols.size() - 1)) > s.rows()) {
    return false;
  }
  detail::Occupancy occ(cols.size() - 1);
  return antipodal_impl(s, cols.indices(), occ);
}

ColumnSet shattered_witness(const SignMatrix& s, const SearchLimits& limits) {
  const SignMatrix d = distinct_rows(s);
  const std::size_t max_k = std::min({s.cols(), floor_log2(d.rows()), kMaxPatternBits});
  return search_largest(d, max_k, limits, [&](const std::vector<std::size_t>& idx, detail::Occupancy& occ) {
    return shattered_impl(d, idx, occ);
  });
}

ColumnSet antipodal_witness(const SignMatrix& s, const SearchLimits& limits) {
  const SignMatrix d = distinct_rows(s);
  const std::size_t vc = shattered_witness(d, limits).size();
  const std::size_t max_k =
      std::min({s.cols(), 2 * vc + 1, floor_log2(d.rows()) + 1, kMaxPatternBits + 1});
  return search_largest(d, max_k, limits, [&](const std::vector<std::size_t>& idx, detail::Occupancy& occ) {
    return antipodal_impl(d, idx, occ);
  });
}

std::size_t vc_dimension(const SignMatrix& s, const SearchLimits& limits) {
  return shattered_witness(s, limits).size();
}

std::size_t dual_sign_rank(const SignMatrix& s, const SearchLimits& limits) {
  return antipodal_witness(s, limits).size();
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > ~std::uint64_t{0}) throw SizeLimitError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t sauer_bound(std::size_t n, std::size_t d) {
  if (d > n) throw InputError("sauer_bound requires d <= N");
  unsigned __int128 total = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    total += binomial(n, i);
    if (total > ~std::uint64_t{0}) throw SizeLimitError("Sauer bound overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

bool is_maximum_class(const ConceptClass& c, std::size_t d) {
  if (d > c.dimension()) return false;
  std::uint64_t bound = 0;
  try {
    bound = sauer_bound(c.dimension(), d);
  } catch (const SizeLimitError&) {
    return false;
  }
  if (c.size() != bound) return false;
  return vc_dimension(c.matrix()) == d;
}

bool is_cube_connected(const ConceptClass& c) {
  const SignMatrix& m = c.matrix();
  const std::size_t words = m.words_per_row();
  auto key_of = [&](std::size_t r) {
    auto bits = m.row_bits(r);
    return std::string(reinterpret_cast<const char*>(bits.data()), words * sizeof(std::uint64_t));
  };
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) index.emplace(key_of(r), r);

  std::vector<char> seen(m.rows(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t r = queue.front();
    queue.pop_front();
    std::string key = key_of(r);
    auto* words_ptr = reinterpret_cast<std::uint64_t*>(key.data());
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const std::uint64_t flip = std::uint64_t{1} << (col & 63);
      words_ptr[col >> 6] ^= flip;
      if (auto it = index.find(key); it != index.end() && !seen[it->second]) {
        seen[it->second] = 1;
        ++reached;
        queue.push_back(it->second);
      }
      words_ptr[col >> 6] ^= flip;
    }
  }
  return reached == m.rows();
}

std::uint64_t max_projections(const SignMatrix& s, std::size_t t, const SearchLimits& limits) {
  if (t > s.cols()) throw InputError("projection size exceeds the number of columns");
  if (t == 0) return 1;
  if (t > 63) throw SizeLimitError("projection size above 63 is not supported");
  check_level(s.cols(), t, limits);
  std::uint64_t best = 0;
  std::vector<std::uint64_t> keys(s.rows());
  auto idx = detail::first_combination(t);
  do {
    for (std::size_t r = 0; r < s.rows(); ++r) keys[r] = detail::project_row(s, r, idx);
    std::sort(keys.begin(), keys.end());
    const auto distinct = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
    best = std::max(best, distinct);
  } while (detail::next_combination(idx, s.cols()));
  return best;
}

}  // namespace signrank
