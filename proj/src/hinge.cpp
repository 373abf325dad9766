#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "signrank/embeddings.hpp"
#include "signrank/errors.hpp"

namespace signrank {

namespace {

constexpr std::size_t kInnerSteps = 20;
constexpr std::size_t kStagnationWindow = 25;
constexpr double kStagnationRelative = 1e-9;

double side_objective(const Eigen::MatrixXd& other, const Eigen::VectorXd& signs, const Eigen::VectorXd& u,
                      double ridge) {
  const Eigen::ArrayXd slack = (1.0 - signs.array() * (other * u).array()).max(0.0);
  return slack.square().sum() + ridge * u.squaredNorm();
}

// Exact minimizer of the squared hinge for one factor with the other fixed,
// by least squares on the active set until the set is stable.
void solve_side(const Eigen::MatrixXd& other, const Eigen::VectorXd& signs, Eigen::Ref<Eigen::VectorXd> u,
                double ridge) {
  const Eigen::Index k = other.cols();
  double current = side_objective(other, signs, u, ridge);
  std::vector<char> active(static_cast<std::size_t>(other.rows()), 0);
  for (std::size_t step = 0; step < kInnerSteps; ++step) {
    const Eigen::VectorXd margins = signs.cwiseProduct(other * u);
    bool changed = (step == 0);
    Eigen::MatrixXd gram = ridge * Eigen::MatrixXd::Identity(k, k);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
    for (Eigen::Index i = 0; i < other.rows(); ++i) {
      const char a = margins(i) < 1.0;
      if (a != active[static_cast<std::size_t>(i)]) changed = true;
      active[static_cast<std::size_t>(i)] = a;
      if (!a) continue;
      gram.noalias() += other.row(i).transpose() * other.row(i);
      rhs += signs(i) * other.row(i).transpose();
    }
    if (!changed) break;
    const Eigen::VectorXd target = gram.ldlt().solve(rhs);
    if (!target.allFinite()) break;
    // Backtracking along the Newton direction of the convex objective.
    const Eigen::VectorXd dir = target - u;
    bool improved = false;
    for (double t = 1.0; t > 1e-4; t *= 0.5) {
      const Eigen::VectorXd next = u + t * dir;
      const double value = side_objective(other, signs, next, ridge);
      if (value < current) {
        u = next;
        current = value;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
}

double total_loss(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v, const Eigen::MatrixXd& s) {
  return (1.0 - s.array() * (u * v.transpose()).array()).max(0.0).square().sum();
}

}  // namespace

std::optional<FactorizationWitness> hinge_search_upper(const SignMatrix& s, std::size_t k, std::uint64_t seed,
                                                       const HingeOptions& opts) {
  if (k == 0) throw InputError("factorization rank must be at least 1");
  const Eigen::MatrixXd target = to_real(s);
  const auto n = static_cast<Eigen::Index>(s.rows());
  const auto m = static_cast<Eigen::Index>(s.cols());
  const auto rank = static_cast<Eigen::Index>(k);

  for (std::size_t restart = 0; restart < opts.restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd u(n, rank), v(m, rank);
    for (Eigen::Index i = 0; i < u.size(); ++i) u.data()[i] = gauss(rng);
    for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] = gauss(rng);

    double best = std::numeric_limits<double>::infinity();
    std::size_t stale = 0;
    for (std::size_t it = 0; it < opts.alternations; ++it) {
      for (Eigen::Index r = 0; r < n; ++r) {
        Eigen::VectorXd row = u.row(r).transpose();
        solve_side(v, target.row(r).transpose(), row, opts.ridge);
        u.row(r) = row.transpose();
      }
      for (Eigen::Index c = 0; c < m; ++c) {
        Eigen::VectorXd col = v.row(c).transpose();
        solve_side(u, target.col(c), col, opts.ridge);
        v.row(c) = col.transpose();
      }

      FactorizationWitness w{k, u, v, 0.0};
      if (verify_realization(w, s)) {
        w.min_margin = factorization_margin(w, s);
        return w;
      }
      const double loss = total_loss(u, v, target);
      if (loss < best * (1.0 - kStagnationRelative)) {
        best = loss;
        stale = 0;
      } else if (++stale >= kStagnationWindow) {
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace signrank
