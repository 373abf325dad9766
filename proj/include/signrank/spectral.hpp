#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "signrank/matrix.hpp"

namespace signrank {

struct PowerOptions {
  double tol = 1e-9;
  std::size_t max_iterations = 10'000;
};

/// Two largest singular values with the convergence record of the iteration.
struct SpectrumSummary {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  /// Largest relative eigen-residual |A v - lambda v| / lambda seen at exit.
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// sigma_1, sigma_2 by power iteration on M^T M with deflation of the
/// leading pair. Non-convergence is reported through `converged`/`residual`.
SpectrumSummary top_singular_values(const Eigen::MatrixXd& m, const PowerOptions& opts = {});

/// Spectrum of a boolean matrix. For a square Delta-regular matrix the top
/// pair (Delta, all-ones) is exact and deflated analytically.
SpectrumSummary boolean_spectrum(const BooleanMatrix& b, const PowerOptions& opts = {});

enum class WitnessKind { identity, regular, custom };

/// A real matrix W with W_ij S_ij >= 1 for its sign matrix, so that
/// ||W|| bounds the star norm of S from above.
struct WitnessMatrix {
  Eigen::MatrixXd values;
  WitnessKind kind = WitnessKind::custom;
};

const char* to_string(WitnessKind kind) noexcept;

/// Exact entrywise check W_ij * S_ij >= 1.
bool is_feasible(const WitnessMatrix& w, const SignMatrix& s);

WitnessMatrix identity_witness(const SignMatrix& s);
/// (N/Delta) B - J; requires a square Delta-regular S with Delta <= N/2.
WitnessMatrix regular_witness(const SignMatrix& s);

/// Spectral norm of the witness, by the same power iteration.
double witness_norm(const WitnessMatrix& w, const PowerOptions& opts = {});

/// N / ||W||, a sign-rank lower bound for any feasible W.
double forster_bound(const SignMatrix& s, const WitnessMatrix& w, const PowerOptions& opts = {});

/// Delta / sigma_2(B) for a Delta-regular S with Delta <= N/2.
double spectral_signrank_lower(const SignMatrix& s, const PowerOptions& opts = {});

/// max over rows of min(#(+1), #(-1)).
std::size_t row_balance(const SignMatrix& s);

/// (N - gamma) / (sqrt(gamma) + 1), a lower bound on the star norm.
double star_norm_floor(const SignMatrix& s);

/// sqrt(Delta (N - Delta) / (N - 1)), the trace-argument floor on sigma_2(B).
double sigma2_trace_floor(const BooleanMatrix& b);

/// 2 Delta + 1 for a Delta-regular S.
std::size_t regular_upper_bound(const SignMatrix& s);

/// Integer certificate from a real lower bound: ceil(bound - 1e-9).
std::size_t certificate_ceil(double bound);

}  // namespace signrank
