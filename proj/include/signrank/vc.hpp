#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "signrank/matrix.hpp"

namespace signrank {

/// Sorted set of distinct column indices.
class ColumnSet {
 public:
  ColumnSet() = default;
  /// Sorts and validates; duplicates are rejected.
  explicit ColumnSet(std::vector<std::size_t> indices);
  ColumnSet(std::initializer_list<std::size_t> indices)
      : ColumnSet(std::vector<std::size_t>(indices)) {}

  static ColumnSet all(std::size_t n);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t c) const noexcept;
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

 private:
  std::vector<std::size_t> indices_;
};

/// A set of vectors in {+1,-1}^N, stored as a sign matrix with pairwise
/// distinct rows.
class ConceptClass {
 public:
  explicit ConceptClass(SignMatrix m);

  const SignMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return matrix_.rows(); }
  std::size_t dimension() const noexcept { return matrix_.cols(); }

 private:
  SignMatrix matrix_;
};

/// Caps on exhaustive column-subset searches. A search level whose number of
/// subsets exceeds max_subsets_per_level is refused with SizeLimitError.
struct SearchLimits {
  std::uint64_t max_subsets_per_level = 20'000'000;
};

bool is_shattered(const SignMatrix& s, const ColumnSet& cols);
bool is_antipodally_shattered(const SignMatrix& s, const ColumnSet& cols);

std::size_t vc_dimension(const SignMatrix& s, const SearchLimits& limits = {});
std::size_t dual_sign_rank(const SignMatrix& s, const SearchLimits& limits = {});

/// Largest shattered / antipodally shattered set found by the searches above.
ColumnSet shattered_witness(const SignMatrix& s, const SearchLimits& limits = {});
ColumnSet antipodal_witness(const SignMatrix& s, const SearchLimits& limits = {});

/// Sum_{i=0}^{d} C(n, i). Throws InputError if d > n and SizeLimitError on
/// 64-bit overflow.
std::uint64_t sauer_bound(std::size_t n, std::size_t d);
std::uint64_t binomial(std::size_t n, std::size_t k);

bool is_maximum_class(const ConceptClass& c, std::size_t d);

/// Connectivity of the one-inclusion graph (Hamming distance one edges).
bool is_cube_connected(const ConceptClass& c);

/// Maximum over t-column subsets of the number of distinct row restrictions.
std::uint64_t max_projections(const SignMatrix& s, std::size_t t, const SearchLimits& limits = {});

}  // namespace signrank
