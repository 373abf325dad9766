#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "signrank/errors.hpp"
#include "signrank/generators.hpp"
#include "signrank/vc.hpp"

using namespace signrank;

TEST_SUITE("vc") {
  TEST_CASE("shattering examples") {
    const auto id = signed_identity(4);
    CHECK_FALSE(is_shattered(id, ColumnSet({0, 1})));
    const auto dj = disjointness(2);
    CHECK(is_shattered(dj, ColumnSet({1, 2})));
    CHECK_FALSE(is_shattered(SignMatrix::from_rows({{1, 1}, {1, -1}}), ColumnSet({0})));
    CHECK(is_antipodally_shattered(dj, ColumnSet({0, 1, 2})));
    CHECK_FALSE(is_antipodally_shattered(dj, ColumnSet({1, 2, 3})));
    CHECK(is_antipodally_shattered(SignMatrix::filled(3, 3, 1), ColumnSet({2})));
    CHECK_THROWS_AS(is_shattered(id, ColumnSet({4})), InputError);
    CHECK_THROWS_AS(ColumnSet({1, 1}), InputError);
  }

  TEST_CASE("VC dimension and dual sign rank of named matrices") {
    CHECK(vc_dimension(signed_identity(4)) == 1);
    CHECK(dual_sign_rank(signed_identity(4)) == 3);
    CHECK(vc_dimension(projective_incidence(3, 2)) == 2);
    CHECK(vc_dimension(SignMatrix::filled(4, 4, 1)) == 0);
    CHECK(dual_sign_rank(disjointness(2)) == 3);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(dual_sign_rank(SignMatrix::filled(n, n, 1)) == 1);
  }

  TEST_CASE("matches the brute-force oracle") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
      const auto s = oracle::random_matrix(rng, 1 + rng() % 10, 1 + rng() % 7);
      const auto vc = vc_dimension(s);
      const auto dual = dual_sign_rank(s);
      CHECK(vc == oracle::vc(s));
      CHECK(dual == oracle::dual(s));
      CHECK(vc <= dual);
      CHECK(dual <= 2 * vc + 1);
      CHECK(is_shattered(s, shattered_witness(s)));
      CHECK(is_antipodally_shattered(s, antipodal_witness(s)));
    }
  }

  TEST_CASE("witness predicates agree with the oracle on every subset") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 40; ++i) {
      const auto s = oracle::random_matrix(rng, 2 + rng() % 8, 5);
      const auto rows = oracle::rows_of(s);
      for (std::size_t k = 1; k <= 5; ++k) {
        for (const auto& sub : oracle::subsets_of_size(5, k)) {
          const ColumnSet cols(sub);
          CHECK(is_shattered(s, cols) == oracle::shattered(rows, sub));
          CHECK(is_antipodally_shattered(s, cols) == oracle::antipodal(rows, sub));
          if (is_shattered(s, cols)) CHECK(is_antipodally_shattered(s, cols));
        }
      }
    }
  }

  TEST_CASE("row removal is monotone and Sauer holds") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
      const auto s = distinct_rows(oracle::random_matrix(rng, 2 + rng() % 9, 1 + rng() % 6));
      const auto vc = vc_dimension(s);
      CHECK(s.rows() <= sauer_bound(s.cols(), vc));
      if (s.rows() < 2) continue;
      std::vector<std::size_t> keep;
      for (std::size_t r = 1; r < s.rows(); ++r) keep.push_back(r);
      const auto smaller = s.select_rows(keep);
      CHECK(vc_dimension(smaller) <= vc);
      CHECK(dual_sign_rank(smaller) <= dual_sign_rank(s));
    }
  }

  TEST_CASE("Sauer bound and binomials") {
    CHECK(sauer_bound(13, 2) == 92);
    CHECK(sauer_bound(5, 1) == 6);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(sauer_bound(n, n) == (std::uint64_t{1} << n));
    CHECK_THROWS_AS(sauer_bound(3, 4), InputError);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(3, 5) == 0);
    CHECK_THROWS_AS(binomial(200, 100), SizeLimitError);
  }

  TEST_CASE("maximum classes and cube connectivity") {
    CHECK(is_maximum_class(hamming_ball(5, 1), 1));
    CHECK(is_maximum_class(interval_class(default_line_orders(3)), 2));
    CHECK_FALSE(is_maximum_class(hamming_ball(3, 3), 2));
    CHECK(is_cube_connected(hamming_ball(3, 1)));
    CHECK_FALSE(is_cube_connected(ConceptClass(SignMatrix::from_rows({{1, 1}, {-1, -1}}))));
    CHECK_THROWS_AS(ConceptClass(SignMatrix::from_rows({{1}, {1}})), InputError);
  }

  TEST_CASE("projection counts") {
    CHECK(max_projections(SignMatrix::filled(3, 5, 1), 3) == 1);
    CHECK(max_projections(grid_hyperplane(3, 2), 2) == 4);
    CHECK(max_projections(grid_hyperplane(3, 2), 0) == 1);
    CHECK_THROWS_AS(max_projections(grid_hyperplane(3, 2), 5), InputError);
    std::mt19937_64 rng(24);
    for (int i = 0; i < 30; ++i) {
      const auto s = oracle::random_matrix(rng, 2 + rng() % 10, 2 + rng() % 6);
      const auto vc = vc_dimension(s);
      for (std::size_t t = 1; t <= std::min<std::size_t>(s.cols(), 4); ++t) {
        std::uint64_t bound = 0;
        for (std::size_t k = 0; k <= std::min(vc, t); ++k) bound += binomial(t, k);
        CHECK(max_projections(s, t) <= bound);
      }
    }
  }

  TEST_CASE("oversized searches are refused") {
    std::mt19937_64 rng(25);
    const auto wide = oracle::random_matrix(rng, 64, 2000);
    CHECK_THROWS_AS(vc_dimension(wide), SizeLimitError);
  }
}
