#include "signrank/generators.hpp"

#include <algorithm>
#include <string>

#include "detail/combinations.hpp"
#include "signrank/errors.hpp"

namespace signrank {

namespace {

constexpr std::size_t kMaxGeneratedEntries = std::size_t{1} << 26;

void check_entries(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > kMaxGeneratedEntries / rows) {
    throw SizeLimitError("generated matrix would exceed " + std::to_string(kMaxGeneratedEntries) + " entries");
  }
}

void require_prime(std::size_t p) {
  if (!is_prime(p)) throw InputError("order " + std::to_string(p) + " is not prime");
}

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kMaxGeneratedEntries / base) throw SizeLimitError("generator size overflows the supported range");
    out *= base;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::size_t projective_size(std::size_t p, std::size_t d) {
  std::size_t total = 0;
  for (std::size_t i = 0; i <= d; ++i) total += checked_pow(p, i);
  return total;
}

ProjectiveSpace projective_space(std::size_t p, std::size_t d) {
  require_prime(p);
  if (d < 2) throw InputError("projective dimension must be at least 2");
  const std::size_t n = projective_size(p, d);
  check_entries(n, n);
  ProjectiveSpace space{p, d, {}};
  space.points.reserve(n);
  // Vectors with leading coordinate 1 at position `lead`, zeros before it,
  // remaining coordinates ranging over Z_p in lexicographic order.
  for (std::size_t lead = d + 1; lead-- > 0;) {
    const std::size_t free = d - lead;
    const std::size_t count = checked_pow(p, free);
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<std::size_t> v(d + 1, 0);
      v[lead] = 1;
      std::size_t rest = code;
      for (std::size_t k = d + 1; k-- > lead + 1;) {
        v[k] = rest % p;
        rest /= p;
      }
      space.points.push_back(std::move(v));
    }
  }
  std::sort(space.points.begin(), space.points.end());
  return space;
}

SignMatrix signed_identity(std::size_t n) {
  if (n == 0) throw InputError("signed_identity needs N >= 1");
  check_entries(n, n);
  std::vector<std::int8_t> e(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return SignMatrix(n, n, std::move(e));
}

SignMatrix disjointness(std::size_t n) {
  if (n == 0) throw InputError("disjointness needs n >= 1");
  if (n > 12) throw SizeLimitError("disjointness is limited to n <= 12");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::int8_t> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) e[i * m + j] = (i & j) ? 1 : -1;
  }
  return SignMatrix(m, m, std::move(e));
}

SignMatrix projective_incidence(std::size_t p, std::size_t d) {
  const auto space = projective_space(p, d);
  const std::size_t n = space.points.size();
  std::vector<std::int8_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t dot = 0;
      for (std::size_t k = 0; k <= d; ++k) dot += space.points[i][k] * space.points[j][k];
      e[i * n + j] = (dot % p == 0) ? 1 : -1;
    }
  }
  return SignMatrix(n, n, std::move(e));
}

ConceptClass hamming_ball(std::size_t n, std::size_t d) {
  if (n == 0) throw InputError("hamming_ball needs N >= 1");
  const std::uint64_t size = sauer_bound(n, d);
  check_entries(size, n);
  std::vector<std::int8_t> e;
  e.reserve(size * n);
  for (std::size_t w = 0; w <= d; ++w) {
    auto support = detail::first_combination(w);
    do {
      std::vector<std::int8_t> row(n, -1);
      for (auto i : support) row[i] = 1;
      e.insert(e.end(), row.begin(), row.end());
    } while (detail::next_combination(support, n));
  }
  return ConceptClass(SignMatrix(static_cast<std::size_t>(size), n, std::move(e)));
}

SignMatrix grid_hyperplane(std::size_t n, std::size_t d) {
  if (n < 2 || d < 1) throw InputError("grid_hyperplane needs n >= 2 and d >= 1");
  const std::size_t rows = checked_pow(n, d);
  const std::size_t cols = d * (n - 1);
  check_entries(rows, cols);
  std::vector<std::int8_t> e;
  e.reserve(rows * cols);
  std::vector<std::size_t> x(d, 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 1; i < n; ++i) e.push_back(x[j] >= i + 1 ? 1 : -1);
    }
    for (std::size_t k = d; k-- > 0;) {
      if (++x[k] <= n) break;
      x[k] = 1;
    }
  }
  return SignMatrix(rows, cols, std::move(e));
}

LineOrders default_line_orders(std::size_t p) {
  const auto plane = projective_incidence(p, 2);
  LineOrders orders{p, {}};
  orders.lines.resize(plane.cols());
  for (std::size_t line = 0; line < plane.cols(); ++line) {
    for (std::size_t pt = 0; pt < plane.rows(); ++pt) {
      if (plane.positive(pt, line)) orders.lines[line].push_back(pt);
    }
  }
  return orders;
}

LineOrders planted_line_orders(std::size_t p, std::mt19937_64& rng) {
  LineOrders orders = default_line_orders(p);
  std::bernoulli_distribution coin(0.5);
  for (auto& line : orders.lines) {
    std::vector<std::size_t> prefix, rest;
    for (auto pt : line) (coin(rng) ? prefix : rest).push_back(pt);
    prefix.insert(prefix.end(), rest.begin(), rest.end());
    line = std::move(prefix);
  }
  return orders;
}

ConceptClass interval_class(const LineOrders& orders) {
  require_prime(orders.p);
  const std::size_t n = projective_size(orders.p, 2);
  if (orders.lines.size() != n) throw InputError("line orders must list every line of the plane");
  const auto reference = default_line_orders(orders.p);
  for (std::size_t i = 0; i < n; ++i) {
    auto sorted = orders.lines[i];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != reference.lines[i]) {
      throw InputError("order of line " + std::to_string(i) + " is not a permutation of its points");
    }
  }

  std::vector<std::int8_t> e;
  auto push_row = [&](auto&& in_set) {
    for (std::size_t pt = 0; pt < n; ++pt) e.push_back(in_set(pt) ? 1 : -1);
  };
  push_row([](std::size_t) { return false; });
  for (std::size_t s = 0; s < n; ++s) push_row([s](std::size_t pt) { return pt == s; });
  for (const auto& line : orders.lines) {
    for (std::size_t a = 0; a < line.size(); ++a) {
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        std::vector<char> member(n, 0);
        for (std::size_t k = a; k <= b; ++k) member[line[k]] = 1;
        push_row([&](std::size_t pt) { return member[pt] != 0; });
      }
    }
  }
  const std::size_t rows = e.size() / n;
  return ConceptClass(SignMatrix(rows, n, std::move(e)));
}

SignMatrix line_subset_random(std::size_t p, std::mt19937_64& rng, double keep_prob) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) throw InputError("keep probability must lie in [0, 1]");
  const auto plane = projective_incidence(p, 2);
  std::bernoulli_distribution keep(keep_prob);
  std::vector<std::int8_t> e(plane.entries());
  for (auto& v : e) {
    if (v > 0 && !keep(rng)) v = -1;
  }
  return SignMatrix(plane.rows(), plane.cols(), std::move(e));
}

}  // namespace signrank
