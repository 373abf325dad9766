#include "signrank/stabbing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <numbers>
#include <string>

#include "signrank/errors.hpp"

namespace signrank {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr std::size_t kRenormalizeEvery = 64;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> crossed_columns(const SignMatrix& s, std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  auto x = s.row_bits(a);
  auto y = s.row_bits(b);
  for (std::size_t w = 0; w < x.size(); ++w) {
    std::uint64_t diff = x[w] ^ y[w];
    while (diff) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(diff)));
      diff &= diff - 1;
    }
  }
  return out;
}

double crossed_mass(const SignMatrix& s, std::size_t a, std::size_t b, const std::vector<double>& p) {
  double m = 0.0;
  auto x = s.row_bits(a);
  auto y = s.row_bits(b);
  for (std::size_t w = 0; w < x.size(); ++w) {
    std::uint64_t diff = x[w] ^ y[w];
    while (diff) {
      m += p[w * 64 + static_cast<std::size_t>(std::countr_zero(diff))];
      diff &= diff - 1;
    }
  }
  return m;
}

// Pair weights, stored densely; only u < v entries are meaningful.
class PairWeights {
 public:
  explicit PairWeights(std::size_t n) : n_(n), w_(n * n, 0.0) {}
  double& at(std::size_t u, std::size_t v) { return w_[std::min(u, v) * n_ + std::max(u, v)]; }

  void recompute(const SignMatrix& s, const std::vector<double>& p) {
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) w_[u * n_ + v] = crossed_mass(s, u, v, p);
    }
  }

  // Applies a doubling update incrementally: every pair gains the old mass of
  // the crossed columns it also crosses, then everything is divided by 1+x.
  void apply_doubling(const SignMatrix& s, const std::vector<std::size_t>& crossed,
                      const std::vector<double>& p_old, double x) {
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    for (auto j : crossed) {
      plus.clear();
      minus.clear();
      for (std::size_t r = 0; r < n_; ++r) (s.positive(r, j) ? plus : minus).push_back(r);
      for (auto a : plus) {
        for (auto b : minus) at(a, b) += p_old[j];
      }
    }
    const double scale = 1.0 / (1.0 + x);
    for (auto& v : w_) v *= scale;
  }

 private:
  std::size_t n_;
  std::vector<double> w_;
};

// Hierholzer's algorithm on the tree with every edge doubled; returns the
// closed walk of length 2n-1 starting at vertex 0.
std::vector<std::size_t> euler_walk(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& tree) {
  struct Arc {
    std::size_t to;
    std::size_t id;
  };
  std::vector<std::vector<Arc>> adj(n);
  std::size_t id = 0;
  for (const auto& [u, v] : tree) {
    for (int copy = 0; copy < 2; ++copy) {
      adj[u].push_back({v, id});
      adj[v].push_back({u, id});
      ++id;
    }
  }
  std::vector<char> used(id, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> walk;
  walk.reserve(2 * n);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    while (next[v] < adj[v].size() && used[adj[v][next[v]].id]) ++next[v];
    if (next[v] == adj[v].size()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      const Arc arc = adj[v][next[v]];
      used[arc.id] = 1;
      stack.push_back(arc.to);
    }
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace

RowOrdering count_sign_changes(const SignMatrix& s, std::span<const std::size_t> permutation) {
  if (permutation.size() != s.rows()) throw InputError("permutation length does not match the row count");
  std::vector<char> seen(s.rows(), 0);
  for (auto r : permutation) {
    if (r >= s.rows() || seen[r]) throw InputError("invalid row permutation");
    seen[r] = 1;
  }
  RowOrdering out;
  out.permutation.assign(permutation.begin(), permutation.end());
  out.sign_changes.assign(s.cols(), 0);
  for (std::size_t i = 0; i + 1 < permutation.size(); ++i) {
    auto a = s.row(permutation[i]);
    auto b = s.row(permutation[i + 1]);
    for (std::size_t c = 0; c < s.cols(); ++c) out.sign_changes[c] += (a[c] != b[c]);
  }
  out.max_sign_changes = *std::max_element(out.sign_changes.begin(), out.sign_changes.end());
  return out;
}

DoublingStep doubling_update(std::span<const double> p, const ColumnSet& crossed) {
  DoublingStep step;
  for (auto j : crossed) {
    if (j >= p.size()) throw InputError("crossed column index out of range");
    step.x += p[j];
  }
  step.p.assign(p.begin(), p.end());
  const double denom = 1.0 + step.x;
  for (auto& v : step.p) v /= denom;
  for (auto j : crossed) step.p[j] *= 2.0;
  return step;
}

WelzlResult welzl_path(const SignMatrix& s, std::mt19937_64& tie_rng, std::optional<std::size_t> d) {
  if (!has_distinct_rows(s)) throw InputError("welzl_path requires pairwise distinct rows");
  const std::size_t n = s.rows();
  const std::size_t m = s.cols();

  WelzlResult result;
  result.d = d ? *d : vc_dimension(s);
  auto& state = result.state;
  state.p.assign(m, 1.0 / static_cast<double>(m));

  PairWeights weights(n);
  weights.recompute(s, state.p);
  DisjointSets components(n);

  for (std::size_t step = 1; step < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    std::pair<std::size_t, std::size_t> chosen{0, 0};
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t cu = components.find(u);
      for (std::size_t v = u + 1; v < n; ++v) {
        if (components.find(v) == cu) continue;
        const double w = weights.at(u, v);
        if (w < best - kTieTolerance) {
          best = w;
          ties = 1;
          chosen = {u, v};
        } else if (w <= best + kTieTolerance) {
          ++ties;
          if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(tie_rng) == 0) chosen = {u, v};
        }
      }
    }

    const auto [u, v] = chosen;
    const auto crossed = crossed_columns(s, u, v);
    const std::vector<double> p_old = state.p;
    auto update = doubling_update(p_old, ColumnSet(crossed));
    state.x_log.push_back(update.x);
    state.forest.emplace_back(u, v);
    components.unite(u, v);
    state.p = std::move(update.p);

    if (step % kRenormalizeEvery == 0) {
      const double total = std::accumulate(state.p.begin(), state.p.end(), 0.0);
      for (auto& x : state.p) x /= total;
      weights.recompute(s, state.p);
    } else {
      weights.apply_doubling(s, crossed, p_old, update.x);
    }
  }

  state.component.resize(n);
  for (std::size_t r = 0; r < n; ++r) state.component[r] = components.find(r);

  result.tree_crossings.assign(m, 0);
  for (const auto& [u, v] : state.forest) {
    for (auto j : crossed_columns(s, u, v)) ++result.tree_crossings[j];
  }
  result.tree_stabbing = *std::max_element(result.tree_crossings.begin(), result.tree_crossings.end());

  std::vector<std::size_t> permutation;
  permutation.reserve(n);
  std::vector<char> visited(n, 0);
  for (auto r : euler_walk(n, state.forest)) {
    if (!visited[r]) {
      visited[r] = 1;
      permutation.push_back(r);
    }
  }
  result.ordering = count_sign_changes(s, permutation);
  return result;
}

RowOrdering vc1_path(const SignMatrix& s) {
  if (!has_distinct_rows(s)) throw InputError("vc1_path requires pairwise distinct rows");
  if (vc_dimension(s) > 1) throw PreconditionError("vc1_path requires VC dimension at most 1");

  struct Removal {
    std::size_t unique_row;
    std::optional<std::size_t> twin;
  };
  std::vector<std::size_t> rows(s.rows());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<std::size_t> cols(s.cols());
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<Removal> removals;

  for (;;) {
    std::erase_if(cols, [&](std::size_t c) {
      return std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return s(r, c) == s(rows[0], c); });
    });
    if (cols.empty()) break;

    // Pivot column: fewest minority entries, lowest index first.
    std::size_t pivot = cols[0];
    std::size_t best_minority = rows.size();
    for (auto c : cols) {
      std::size_t ones = 0;
      for (auto r : rows) ones += s.positive(r, c);
      const std::size_t minority = std::min(ones, rows.size() - ones);
      if (minority < best_minority) {
        best_minority = minority;
        pivot = c;
      }
    }
    if (best_minority != 1) throw PreconditionError("no column isolates a single row; VC dimension exceeds 1");

    std::size_t ones = 0;
    for (auto r : rows) ones += s.positive(r, pivot);
    const bool minority_positive = (ones == 1);
    const std::size_t unique_row =
        *std::find_if(rows.begin(), rows.end(), [&](std::size_t r) { return s.positive(r, pivot) == minority_positive; });

    std::optional<std::size_t> twin;
    for (auto r : rows) {
      if (r == unique_row) continue;
      const bool same = std::all_of(cols.begin(), cols.end(),
                                    [&](std::size_t c) { return c == pivot || s(r, c) == s(unique_row, c); });
      if (same) {
        twin = r;
        break;
      }
    }
    removals.push_back({unique_row, twin});
    std::erase(cols, pivot);
    if (twin) std::erase(rows, *twin);
  }

  // The remaining row set is a single row; replay removals bottom-up, each
  // twin placed right after its partner.
  std::vector<std::size_t> order = rows;
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    if (!it->twin) continue;
    auto pos = std::find(order.begin(), order.end(), it->unique_row);
    order.insert(pos + 1, *it->twin);
  }
  return count_sign_changes(s, order);
}

std::size_t sc_star_bruteforce(const SignMatrix& s) {
  if (s.rows() > 8) throw SizeLimitError("sc_star_bruteforce is limited to 8 rows");
  if (!has_distinct_rows(s)) throw InputError("sc_star_bruteforce requires pairwise distinct rows");
  std::vector<std::size_t> perm(s.rows());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  do {
    // An order and its reverse have the same sign changes.
    if (perm.front() > perm.back()) continue;
    best = std::min(best, count_sign_changes(s, perm).max_sign_changes);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double haussler_packing_limit(std::size_t d, double eps) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  constexpr double e = std::numbers::e;
  return e * static_cast<double>(d + 1) * std::pow(2.0 * e / eps, static_cast<double>(d));
}

double welzl_step_bound(std::size_t n, std::size_t i, std::size_t d) {
  if (d == 0 || i >= n) throw InputError("step bound needs d >= 1 and 1 <= i < N");
  constexpr double e = std::numbers::e;
  return 4.0 * e * e * std::pow(static_cast<double>(n - i), -1.0 / static_cast<double>(d));
}

double welzl_path_bound(std::size_t n, std::size_t d) {
  if (d == 0) return 200.0;
  return 200.0 * std::pow(static_cast<double>(n), 1.0 - 1.0 / static_cast<double>(d));
}

}  // namespace signrank
