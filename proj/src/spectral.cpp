#include "signrank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "signrank/errors.hpp"

namespace signrank {

namespace {

struct PowerRun {
  double lambda = 0.0;
  Eigen::VectorXd v;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool degenerate = true;
};

void project_out(Eigen::VectorXd& x, const std::vector<Eigen::VectorXd>& basis) {
  for (const auto& b : basis) x -= b.dot(x) * b;
}

// Deterministic start vector with no special alignment to structured
// matrices (fractional parts of multiples of the golden ratio).
Eigen::VectorXd generic_vector(Eigen::Index n, double shift) {
  Eigen::VectorXd g(n);
  constexpr double phi = 0.6180339887498949;
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i) = std::fmod((static_cast<double>(i) + 1.0 + shift) * phi, 1.0) - 0.5;
  }
  return g;
}

// Power iteration for the top eigenpair of M^T M restricted to the
// orthogonal complement of `deflate` (orthonormal vectors).
PowerRun power_run(const Eigen::MatrixXd& m, Eigen::VectorXd v, const std::vector<Eigen::VectorXd>& deflate,
                   const PowerOptions& opts, double scale) {
  PowerRun run;
  project_out(v, deflate);
  const double start_norm = v.norm();
  if (start_norm < 1e-12) return run;
  v /= start_norm;
  run.degenerate = false;

  const double zero_level = 1e-13 * scale;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    Eigen::VectorXd z = m.transpose() * (m * v);
    project_out(z, deflate);
    run.iterations = it + 1;
    const double znorm = z.norm();
    if (znorm <= zero_level) {
      run.lambda = 0.0;
      run.v = v;
      run.residual = 0.0;
      run.converged = true;
      return run;
    }
    const double lambda = v.dot(z);
    run.lambda = lambda;
    run.v = v;
    run.residual = (z - lambda * v).norm() / std::max(lambda, zero_level);
    if (run.residual <= opts.tol) {
      run.converged = true;
      return run;
    }
    v = z / znorm;
  }
  run.v = v;
  return run;
}

PowerRun best_of(std::vector<PowerRun> runs) {
  PowerRun best;
  bool have = false;
  for (auto& r : runs) {
    if (r.degenerate) continue;
    if (!have || r.lambda > best.lambda * (1.0 + 1e-12)) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

PowerRun second_pair(const Eigen::MatrixXd& m, const Eigen::VectorXd& v1, const PowerOptions& opts, double scale) {
  const Eigen::Index n = m.cols();
  std::vector<Eigen::VectorXd> deflate{v1};
  std::vector<PowerRun> runs;
  // First coordinate vector, falling through to the next ones if it lies in
  // the deflated direction.
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(i) = 1.0;
    auto r = power_run(m, e, deflate, opts, scale);
    if (!r.degenerate) {
      runs.push_back(std::move(r));
      break;
    }
  }
  runs.push_back(power_run(m, generic_vector(n, 0.5), deflate, opts, scale));
  return best_of(std::move(runs));
}

SpectrumSummary summarize(const PowerRun& top, const PowerRun& second, double sigma1_override = -1.0) {
  SpectrumSummary out;
  out.sigma1 = sigma1_override >= 0.0 ? sigma1_override : std::sqrt(std::max(top.lambda, 0.0));
  out.sigma2 = second.degenerate ? 0.0 : std::sqrt(std::max(second.lambda, 0.0));
  out.iterations = top.iterations + second.iterations;
  out.residual = std::max(top.residual, second.degenerate ? 0.0 : second.residual);
  out.converged = (top.degenerate || top.converged) && (second.degenerate || second.converged);
  if (out.sigma2 > out.sigma1) std::swap(out.sigma1, out.sigma2);
  return out;
}

std::size_t require_regular_degree(const SignMatrix& s) {
  const auto info = regularity(s);
  if (!info.degree) throw PreconditionError("matrix is not square and regular");
  const std::size_t delta = *info.degree;
  if (delta == 0 || 2 * delta > s.rows()) {
    throw PreconditionError("regular degree must satisfy 1 <= Delta <= N/2");
  }
  return delta;
}

}  // namespace

SpectrumSummary top_singular_values(const Eigen::MatrixXd& m, const PowerOptions& opts) {
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
  const double scale = m.squaredNorm();
  if (m.size() == 0 || scale == 0.0) return {};
  const Eigen::Index n = m.cols();
  auto top = best_of({power_run(m, Eigen::VectorXd::Ones(n), {}, opts, scale),
                      power_run(m, generic_vector(n, 0.0), {}, opts, scale)});
  auto second = second_pair(m, top.v, opts, scale);
  return summarize(top, second);
}

SpectrumSummary boolean_spectrum(const BooleanMatrix& b, const PowerOptions& opts) {
  const auto info = regularity(b);
  const Eigen::MatrixXd m = to_real(b);
  if (!info.degree || *info.degree == 0) return top_singular_values(m, opts);
  const double scale = m.squaredNorm();
  const Eigen::Index n = m.cols();
  PowerRun top;
  top.v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  top.converged = true;
  top.degenerate = false;
  auto second = second_pair(m, top.v, opts, scale);
  return summarize(top, second, static_cast<double>(*info.degree));
}

const char* to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::identity:
      return "identity";
    case WitnessKind::regular:
      return "regular";
    case WitnessKind::custom:
      return "custom";
  }
  return "custom";
}

bool is_feasible(const WitnessMatrix& w, const SignMatrix& s) {
  if (w.values.rows() != static_cast<Eigen::Index>(s.rows()) ||
      w.values.cols() != static_cast<Eigen::Index>(s.cols())) {
    return false;
  }
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) {
      if (!(w.values(r, c) * s(r, c) >= 1.0)) return false;
    }
  }
  return true;
}

WitnessMatrix identity_witness(const SignMatrix& s) { return {to_real(s), WitnessKind::identity}; }

WitnessMatrix regular_witness(const SignMatrix& s) {
  const std::size_t delta = require_regular_degree(s);
  const double ratio = static_cast<double>(s.rows()) / static_cast<double>(delta);
  WitnessMatrix w{ratio * to_real(to_boolean(s)) - Eigen::MatrixXd::Ones(s.rows(), s.cols()), WitnessKind::regular};
  if (!is_feasible(w, s)) throw PreconditionError("regular witness is not feasible");
  return w;
}

double witness_norm(const WitnessMatrix& w, const PowerOptions& opts) {
  return top_singular_values(w.values, opts).sigma1;
}

double forster_bound(const SignMatrix& s, const WitnessMatrix& w, const PowerOptions& opts) {
  if (s.rows() != s.cols()) throw InputError("forster_bound needs a square matrix");
  if (!is_feasible(w, s)) throw InputError("witness is not feasible for this sign matrix");
  return static_cast<double>(s.rows()) / witness_norm(w, opts);
}

double spectral_signrank_lower(const SignMatrix& s, const PowerOptions& opts) {
  const std::size_t delta = require_regular_degree(s);
  const double sigma2 = boolean_spectrum(to_boolean(s), opts).sigma2;
  return static_cast<double>(delta) / sigma2;
}

std::size_t row_balance(const SignMatrix& s) {
  std::size_t gamma = 0;
  for (std::size_t r = 0; r < s.rows(); ++r) {
    std::size_t plus = 0;
    for (auto v : s.row(r)) plus += (v > 0);
    gamma = std::max(gamma, std::min(plus, s.cols() - plus));
  }
  return gamma;
}

double star_norm_floor(const SignMatrix& s) {
  if (s.rows() != s.cols()) throw InputError("star_norm_floor needs a square matrix");
  const double gamma = static_cast<double>(row_balance(s));
  return (static_cast<double>(s.rows()) - gamma) / (std::sqrt(gamma) + 1.0);
}

double sigma2_trace_floor(const BooleanMatrix& b) {
  const auto info = regularity(b);
  if (!info.degree) throw PreconditionError("sigma2_trace_floor needs a square regular matrix");
  const double n = static_cast<double>(b.rows());
  const double delta = static_cast<double>(*info.degree);
  if (b.rows() == 1) return 0.0;
  return std::sqrt(delta * (n - delta) / (n - 1.0));
}

std::size_t regular_upper_bound(const SignMatrix& s) {
  const auto info = regularity(s);
  if (!info.degree) throw PreconditionError("regular_upper_bound needs a square regular matrix");
  return 2 * *info.degree + 1;
}

std::size_t certificate_ceil(double bound) {
  const double c = std::ceil(bound - 1e-9);
  return c <= 0.0 ? 0 : static_cast<std::size_t>(c);
}

}  // namespace signrank
