#include "signrank/enumeration.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "detail/combinations.hpp"
#include "signrank/errors.hpp"
#include "signrank/vc.hpp"

namespace signrank {

namespace {

constexpr std::size_t kMaxExactN = 4;
constexpr std::size_t kMaxSampleN = 16;

// Projection of vertex v onto the coordinates in `mask`, packed densely.
std::uint32_t compress(std::uint32_t v, std::uint32_t mask) {
  std::uint32_t out = 0;
  std::uint32_t bit = 1;
  for (; mask != 0; mask &= mask - 1) {
    if (v & mask & (~mask + 1)) out |= bit;
    bit <<= 1;
  }
  return out;
}

// VC dimension of a class given as a bitmask over the 2^n cube vertices.
std::size_t class_vc(std::uint32_t cls, std::size_t n) {
  std::size_t best = 0;
  for (std::uint32_t t = 1; t < (1u << n); ++t) {
    const auto k = static_cast<std::size_t>(std::popcount(t));
    if (k <= best || (std::size_t{1} << k) > static_cast<std::size_t>(std::popcount(cls))) continue;
    std::uint32_t seen = 0;
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      if (cls >> v & 1u) seen |= 1u << compress(v, t);
    }
    if (static_cast<std::size_t>(std::popcount(seen)) == (std::size_t{1} << k)) best = k;
  }
  return best;
}

bool cube_connected(std::uint32_t cls, std::size_t n) {
  const std::uint32_t start = std::countr_zero(cls);
  std::uint32_t reached = 1u << start;
  std::uint32_t frontier = reached;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(f));
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t w = v ^ (1u << j);
        if ((cls >> w & 1u) && !(reached >> w & 1u)) next |= 1u << w;
      }
    }
    reached |= next;
    frontier = next;
  }
  return reached == cls;
}

}  // namespace

CensusResult enumerate_census(std::size_t n, std::size_t d) {
  if (n == 0) throw InputError("census needs N >= 1");
  if (n > kMaxExactN) {
    throw SizeLimitError("exact census is limited to N <= " + std::to_string(kMaxExactN) + "; use sampling");
  }
  if (d > n) throw InputError("census needs d <= N");
  CensusResult out;
  out.n = n;
  out.d = d;
  out.by_vc.assign(n + 1, 0);
  const std::uint64_t maximum_size = sauer_bound(n, d);
  const std::uint64_t classes = (std::uint64_t{1} << (std::size_t{1} << n)) - 1;
  for (std::uint64_t c = 1; c <= classes; ++c) {
    const auto cls = static_cast<std::uint32_t>(c);
    const std::size_t vc = class_vc(cls, n);
    ++out.by_vc[vc];
    if (vc == d && static_cast<std::uint64_t>(std::popcount(cls)) == maximum_size) {
      ++out.maximum_count;
      out.all_maximum_connected = out.all_maximum_connected && cube_connected(cls, n);
    }
  }
  out.count_exact = out.by_vc[d];
  out.count_at_most = std::accumulate(out.by_vc.begin(), out.by_vc.begin() + static_cast<std::ptrdiff_t>(d) + 1,
                                      std::uint64_t{0});
  return out;
}

CensusEstimate sample_census(std::size_t n, std::size_t d, std::size_t class_size, std::size_t samples,
                             std::mt19937_64& rng) {
  if (n == 0 || n > kMaxSampleN) throw InputError("sampled census needs 1 <= N <= " + std::to_string(kMaxSampleN));
  const std::size_t vertices = std::size_t{1} << n;
  if (class_size == 0 || class_size > vertices) throw InputError("class size must lie in [1, 2^N]");
  if (samples == 0) throw InputError("sampled census needs at least one sample");

  CensusEstimate out{n, d, class_size, samples, 0, 0.0, 0.0};
  std::vector<std::uint32_t> pool(vertices);
  std::iota(pool.begin(), pool.end(), 0u);
  const std::size_t k = d + 1;
  std::vector<char> seen;

  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < class_size; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, vertices - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    bool shattered = false;
    if (k <= n && (std::size_t{1} << k) <= class_size) {
      seen.assign(std::size_t{1} << k, 0);
      auto t = detail::first_combination(k);
      do {
        std::uint32_t mask = 0;
        for (auto j : t) mask |= 1u << j;
        std::fill(seen.begin(), seen.end(), 0);
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < class_size && distinct < seen.size(); ++i) {
          auto& slot = seen[compress(pool[i], mask)];
          if (!slot) {
            slot = 1;
            ++distinct;
          }
        }
        shattered = (distinct == seen.size());
      } while (!shattered && detail::next_combination(t, n));
    }
    if (!shattered) ++out.hits;
  }
  out.fraction = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.radius = std::sqrt(std::log(2.0 / 0.05) / (2.0 * static_cast<double>(samples)));
  return out;
}

}  // namespace signrank
