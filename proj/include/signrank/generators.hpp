#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "signrank/matrix.hpp"
#include "signrank/vc.hpp"

namespace signrank {

bool is_prime(std::uint64_t n) noexcept;

/// N_{p,d} = p^d + ... + p + 1.
std::size_t projective_size(std::size_t p, std::size_t d);

/// Points of PG(d, p) as canonical homogeneous vectors (first nonzero
/// coordinate 1), lexicographically ordered. Hyperplanes use the same list.
struct ProjectiveSpace {
  std::size_t p = 0;
  std::size_t d = 0;
  std::vector<std::vector<std::size_t>> points;
};

ProjectiveSpace projective_space(std::size_t p, std::size_t d);

/// +1 on the diagonal, -1 elsewhere.
SignMatrix signed_identity(std::size_t n);

/// 2^n x 2^n, subsets in binary order, +1 iff they intersect.
SignMatrix disjointness(std::size_t n);

/// Point-hyperplane incidence of PG(d, p): +1 iff <point, hyperplane> = 0 mod p.
SignMatrix projective_incidence(std::size_t p, std::size_t d);

/// All +-1 vectors of length n with at most d coordinates equal to +1,
/// ordered by weight and then lexicographically by support.
ConceptClass hamming_ball(std::size_t n, std::size_t d);

/// Grid [n]^d against the d(n-1) axis-parallel threshold halfspaces.
/// Column j(n-1) + (i-1) is +1 iff x_j >= i + 1.
SignMatrix grid_hyperplane(std::size_t n, std::size_t d);

/// For every line of the projective plane of order p, its points in order.
struct LineOrders {
  std::size_t p = 0;
  std::vector<std::vector<std::size_t>> lines;
};

LineOrders default_line_orders(std::size_t p);
/// Each line is reordered so that an independently drawn random subset of
/// its points forms a prefix.
LineOrders planted_line_orders(std::size_t p, std::mt19937_64& rng);

/// Empty set, singletons, and every contiguous run of length >= 2 on every
/// ordered line, as indicator rows over the plane's points.
ConceptClass interval_class(const LineOrders& orders);

/// Plane incidence with each 1 kept independently with probability keep_prob.
SignMatrix line_subset_random(std::size_t p, std::mt19937_64& rng, double keep_prob = 0.5);

/// 1/(2 N^{7/15}) for d = 3, 1/(2 N^{(d^2+5d+2)/(d^3+2d^2+3d)}) for d >= 5.
double heavy_free_probability(std::size_t n, std::size_t d);

/// True iff some (d+1)-column submatrix dominates, on distinct rows, every
/// vector of length d+1 with at most one zero (d = 3) or at most two zeros
/// (d >= 5).
bool contains_heavy_dominant(const BooleanMatrix& b, std::size_t d);

struct HeavyFreeLog {
  double probability = 0.0;
  std::size_t ones_sampled = 0;
  std::size_t ones_final = 0;
  std::size_t occurrences = 0;
  std::size_t zeros_applied = 0;
};

struct HeavyFreeResult {
  SignMatrix matrix;
  HeavyFreeLog log;
};

/// Random N x N boolean matrix with every heavy-dominant submatrix destroyed
/// by zeroing at most two (d = 3) or three (d >= 5) ones per occurrence.
/// `probability` overrides the default sampling density.
HeavyFreeResult heavy_dominant_free_random(std::size_t n, std::size_t d, std::mt19937_64& rng,
                                           std::optional<double> probability = {});

}  // namespace signrank
