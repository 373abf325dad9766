#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "signrank/enumeration.hpp"
#include "signrank/errors.hpp"
#include "signrank/vc.hpp"

using namespace signrank;

TEST_SUITE("enumeration") {
  TEST_CASE("exact census matches brute force") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto expected = oracle::census_by_vc(n);
      for (std::size_t d = 0; d <= n; ++d) {
        const auto c = enumerate_census(n, d);
        CHECK(c.by_vc == expected);
        CHECK(c.count_exact == expected[d]);
        std::uint64_t at_most = 0;
        for (std::size_t k = 0; k <= d; ++k) at_most += expected[k];
        CHECK(c.count_at_most == at_most);
      }
    }
  }

  TEST_CASE("census totals and maximum classes") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto c = enumerate_census(n, 1);
      std::uint64_t total = 0;
      for (auto v : c.by_vc) total += v;
      CHECK(total == (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1);
      CHECK(c.all_maximum_connected);
    }
    CHECK(enumerate_census(2, 0).count_exact == 4);
    CHECK(enumerate_census(2, 1).count_exact == 10);
    CHECK(enumerate_census(2, 1).maximum_count == 4);
    CHECK(enumerate_census(3, 3).count_exact == 1);
    CHECK(enumerate_census(3, 0).maximum_count == 8);
    CHECK_THROWS_AS(enumerate_census(5, 1), SizeLimitError);
    CHECK_THROWS_AS(enumerate_census(2, 3), InputError);
  }

  TEST_CASE("sampled census") {
    std::mt19937_64 rng(71);
    const auto full = sample_census(4, 4, 5, 100, rng);
    CHECK(full.fraction == 1.0);
    CHECK(full.hits == 100);
    CHECK(full.radius == doctest::Approx(std::sqrt(std::log(40.0) / 200.0)));

    // N = 2, classes of size 3: every one has VC dimension exactly 1.
    const auto three = sample_census(2, 0, 3, 200, rng);
    CHECK(three.fraction == 0.0);

    // N = 3, size 4: compare with an exhaustive count over C(8, 4) = 70 classes.
    std::size_t at_most_one = 0;
    for (const auto& idx : oracle::subsets_of_size(8, 4)) {
      std::vector<std::vector<int>> rows;
      for (auto v : idx) rows.push_back({(v & 1) ? 1 : -1, (v & 2) ? 1 : -1, (v & 4) ? 1 : -1});
      at_most_one += oracle::vc(SignMatrix::from_rows(rows)) <= 1;
    }
    const double truth = static_cast<double>(at_most_one) / 70.0;
    const auto est = sample_census(3, 1, 4, 4000, rng);
    CHECK(std::abs(est.fraction - truth) <= est.radius);

    CHECK_THROWS_AS(sample_census(3, 1, 4, 0, rng), InputError);
    CHECK_THROWS_AS(sample_census(3, 1, 9, 10, rng), InputError);
    CHECK_THROWS_AS(sample_census(17, 1, 4, 10, rng), InputError);
  }
}
