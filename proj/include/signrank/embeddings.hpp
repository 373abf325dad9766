#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "signrank/matrix.hpp"
#include "signrank/spectral.hpp"
#include "signrank/vc.hpp"

namespace signrank {

struct Halfplane {
  std::array<double, 2> normal{};
  double offset = 0.0;
};

/// Rows as unit-circle points, columns as halfplanes:
/// sign(<normal_c, point_r> + offset_c) = S_rc.
struct PlanarRealization {
  std::vector<std::array<double, 2>> points;
  std::vector<Halfplane> halfplanes;
};

/// M = U V^T with sign(M) = S. `left` is rows x rank, `right` is cols x rank.
struct FactorizationWitness {
  std::size_t rank = 0;
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
  double min_margin = 0.0;
};

/// Planar realization of a distinct-row matrix of VC dimension at most 1.
PlanarRealization embed_vc1(const SignMatrix& s);

/// Smallest signed margin S_rc (<n_c, x_r> + b_c).
double realization_margin(const PlanarRealization& r, const SignMatrix& s);
/// Smallest S_rc <u_r, v_c>.
double factorization_margin(const FactorizationWitness& w, const SignMatrix& s);

/// Unit-norm points (1e-9) and margin at least 1e-12.
bool verify_realization(const PlanarRealization& r, const SignMatrix& s);
/// All signs correct with strictly positive margin.
bool verify_realization(const FactorizationWitness& w, const SignMatrix& s);

/// Rank-3 factorization u_r = (x, y, 1), v_c = (n_x, n_y, b).
FactorizationWitness to_factorization(const PlanarRealization& r, const SignMatrix& s);

struct HingeOptions {
  std::size_t restarts = 20;
  std::size_t alternations = 5'000;
  double ridge = 1e-8;
};

/// Alternating least squares on the squared hinge loss from Gaussian starts.
/// Restart i draws from its own stream seeded by (seed, i); the first
/// restart that reaches a sign-consistent factorization wins. An empty result
/// is not evidence of a lower bound.
std::optional<FactorizationWitness> hinge_search_upper(const SignMatrix& s, std::size_t k, std::uint64_t seed,
                                                       const HingeOptions& opts = {});

struct LowerBound {
  std::string method;
  double value = 0.0;
};

struct UpperBound {
  std::string method;
  std::size_t value = 0;
  std::string witness;
};

struct BoundReport {
  std::string instance;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::size_t vc = 0;
  std::size_t dual = 0;
  std::vector<LowerBound> lower;
  std::vector<UpperBound> upper;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t welzl_max_sc = 0;
  double welzl_constant = 0.0;
  std::optional<std::size_t> approx;
  bool spectral_converged = true;
  double spectral_residual = 0.0;
};

struct BracketOptions {
  std::string instance = "matrix";
  std::uint64_t seed = 0;
  PowerOptions power;
  HingeOptions hinge;
  bool run_hinge = true;
  SearchLimits limits;
};

/// Certified sign-rank bracket: lower certificates (dual sign rank, Forster
/// witnesses, spectral gap) against upper witnesses (orderings, planar
/// embedding, 2 Delta + 1, verified factorizations).
BoundReport signrank_bracket(const SignMatrix& s, const BracketOptions& opts = {});

/// SC + 1 for the path built on the distinct rows (vc1_path when the VC
/// dimension is at most 1, welzl_path otherwise).
std::size_t approx_sign_rank(const SignMatrix& s, std::uint64_t seed = 0);

}  // namespace signrank
