#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "signrank/matrix.hpp"
#include "signrank/vc.hpp"

namespace signrank {

/// A row order together with its per-column sign-change record.
struct RowOrdering {
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> sign_changes;
  std::size_t max_sign_changes = 0;
};

/// Multiplicative-weights state of the spanning-tree construction.
struct WelzlState {
  /// Column distribution after the last update.
  std::vector<double> p;
  /// Tree edges (row pairs) in the order they were added.
  std::vector<std::pair<std::size_t, std::size_t>> forest;
  /// Component representative of every row.
  std::vector<std::size_t> component;
  /// Weight x_i of the i-th chosen edge under the distribution current at that step.
  std::vector<double> x_log;
};

struct WelzlResult {
  RowOrdering ordering;
  WelzlState state;
  /// VC-dimension value the guarantees are stated against.
  std::size_t d = 0;
  /// Per column, how many tree edges it crosses.
  std::vector<std::size_t> tree_crossings;
  std::size_t tree_stabbing = 0;
};

struct DoublingStep {
  std::vector<double> p;
  double x = 0.0;
};

RowOrdering count_sign_changes(const SignMatrix& s, std::span<const std::size_t> permutation);

/// Doubles the relative mass of the crossed columns and renormalises.
DoublingStep doubling_update(std::span<const double> p, const ColumnSet& crossed);

/// Greedy low-stabbing spanning tree turned into a row path.
///
/// Rows must be pairwise distinct. `d` is the VC dimension (or any upper
/// bound on it); when absent it is computed. Ties between minimum-weight
/// candidate edges are broken uniformly with `tie_rng`.
WelzlResult welzl_path(const SignMatrix& s, std::mt19937_64& tie_rng, std::optional<std::size_t> d = {});

/// Row order with at most two sign changes per column for VC dimension <= 1.
RowOrdering vc1_path(const SignMatrix& s);

/// Exact minimum over all row orders of the maximum column sign changes.
/// Limited to 8 distinct rows.
std::size_t sc_star_bruteforce(const SignMatrix& s);

/// e (d+1) (2e/eps)^d: packing bound on rows pairwise at distance >= eps.
double haussler_packing_limit(std::size_t d, double eps);

/// 4e^2 (N - i)^{-1/d}: bound on the i-th chosen edge weight (1-based i).
double welzl_step_bound(std::size_t n, std::size_t i, std::size_t d);

/// 200 N^{1-1/d}: stabbing-number guarantee for the final path.
double welzl_path_bound(std::size_t n, std::size_t d);

}  // namespace signrank
