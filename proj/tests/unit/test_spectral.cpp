#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "signrank/errors.hpp"
#include "signrank/generators.hpp"
#include "signrank/spectral.hpp"

using namespace signrank;

TEST_SUITE("spectral") {
  TEST_CASE("singular values of named matrices") {
    const auto pg = boolean_spectrum(to_boolean(projective_incidence(3, 2)));
    CHECK(pg.sigma1 == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(std::abs(pg.sigma2 - std::sqrt(3.0)) <= 1e-6);
    CHECK(pg.converged);

    const auto generic = top_singular_values(to_real(to_boolean(projective_incidence(3, 2))));
    CHECK(generic.sigma1 == doctest::Approx(4.0));
    CHECK(std::abs(generic.sigma2 - std::sqrt(3.0)) <= 1e-6);

    const auto id = top_singular_values(to_real(BooleanMatrix::identity(4)));
    CHECK(id.sigma1 == doctest::Approx(1.0));
    CHECK(id.sigma2 == doctest::Approx(1.0));

    const auto ones = top_singular_values(to_real(BooleanMatrix::ones(2, 2)));
    CHECK(ones.sigma1 == doctest::Approx(2.0));
    CHECK(ones.sigma2 == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(top_singular_values(Eigen::MatrixXd::Zero(3, 3)).sigma1 == 0.0);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(top_singular_values(bad), InputError);
  }

  TEST_CASE("matches a dense SVD") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g;
    for (int i = 0; i < 60; ++i) {
      const auto rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      Eigen::MatrixXd a(rows, cols);
      if (i % 2) {
        a = to_real(oracle::random_matrix(rng, rows, cols));
      } else {
        for (Eigen::Index k = 0; k < a.size(); ++k) a.data()[k] = g(rng);
      }
      const auto sv = oracle::singular_values(a);
      const auto got = top_singular_values(a);
      CHECK(got.sigma1 == doctest::Approx(sv(0)).epsilon(1e-6));
      const double second = sv.size() > 1 ? sv(1) : 0.0;
      CHECK(std::abs(got.sigma2 - second) <= 1e-4 * std::max(1.0, sv(0)));
      CHECK(got.sigma1 >= got.sigma2);
    }
  }

  TEST_CASE("start vector orthogonal to the top singular vector") {
    // M 1 = 0, so the all-ones start alone would report sigma_1 = 0.
    Eigen::MatrixXd m(2, 2);
    m << 1, -1, 1, -1;
    CHECK(top_singular_values(m).sigma1 == doctest::Approx(2.0));
  }

  TEST_CASE("witness matrices") {
    const auto pg = projective_incidence(3, 2);
    const auto w = regular_witness(pg);
    CHECK(w.kind == WitnessKind::regular);
    CHECK(is_feasible(w, pg));
    CHECK(witness_norm(w) == doctest::Approx(13.0 / 4.0 * std::sqrt(3.0)).epsilon(1e-8));
    CHECK(forster_bound(pg, w) == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-8));

    const auto id4 = signed_identity(4);
    CHECK(forster_bound(id4, identity_witness(id4)) == doctest::Approx(2.0));
    const auto w4 = regular_witness(id4);
    CHECK(w4.values(0, 0) == 3.0);
    CHECK(w4.values(0, 1) == -1.0);
    const auto plus = SignMatrix::filled(5, 5, 1);
    CHECK(forster_bound(plus, identity_witness(plus)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(regular_witness(SignMatrix::from_rows({{1, 1}, {1, -1}})), PreconditionError);
    CHECK_THROWS_AS(regular_witness(SignMatrix::filled(4, 4, 1)), PreconditionError);
    WitnessMatrix weak{0.5 * to_real(id4), WitnessKind::custom};
    CHECK_FALSE(is_feasible(weak, id4));
    CHECK_THROWS_AS(forster_bound(id4, weak), InputError);
    CHECK_THROWS_AS(forster_bound(SignMatrix::filled(2, 3, 1), identity_witness(SignMatrix::filled(2, 3, 1))),
                    InputError);
  }

  TEST_CASE("spectral lower bound") {
    const double pg3 = spectral_signrank_lower(projective_incidence(3, 2));
    CHECK(pg3 == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-8));
    CHECK(certificate_ceil(pg3) == 3);
    CHECK(spectral_signrank_lower(projective_incidence(5, 2)) == doctest::Approx(6.0 / std::sqrt(5.0)).epsilon(1e-8));
    CHECK_THROWS_AS(spectral_signrank_lower(to_signed(BooleanMatrix::ones(3, 3))), PreconditionError);
    CHECK(certificate_ceil(3.0 + 1e-12) == 3);
    CHECK(certificate_ceil(3.0 + 1e-6) == 4);
  }

  TEST_CASE("regular instances: consistency and floors") {
    for (std::size_t p : {2, 3, 5, 7}) {
      const auto s = projective_incidence(p, 2);
      const auto b = to_boolean(s);
      const double lower = spectral_signrank_lower(s);
      CHECK(std::abs(forster_bound(s, regular_witness(s)) - lower) <= 1e-6);
      CHECK(boolean_spectrum(b).sigma2 >= sigma2_trace_floor(b) - 1e-6);
      CHECK(std::abs(boolean_spectrum(b).sigma2 - sigma2_trace_floor(b)) <= 1e-6);
      CHECK(regular_upper_bound(s) == 2 * (p + 1) + 1);
    }
    CHECK(sigma2_trace_floor(BooleanMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(sigma2_trace_floor(BooleanMatrix::ones(4, 4)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(sigma2_trace_floor(to_boolean(SignMatrix::from_rows({{1, 1}, {1, -1}}))), PreconditionError);
    CHECK(regular_upper_bound(signed_identity(4)) == 3);
    CHECK_THROWS_AS(regular_upper_bound(SignMatrix::from_rows({{1, 1}, {1, -1}})), PreconditionError);
  }

  TEST_CASE("star norm floor") {
    CHECK(row_balance(SignMatrix::filled(6, 6, 1)) == 0);
    CHECK(star_norm_floor(SignMatrix::filled(6, 6, 1)) == doctest::Approx(6.0));
    CHECK(row_balance(signed_identity(4)) == 1);
    CHECK(star_norm_floor(signed_identity(4)) == doctest::Approx(1.5));
    CHECK(star_norm_floor(projective_incidence(3, 2)) == doctest::Approx(3.0));

    std::mt19937_64 rng(42);
    for (int i = 0; i < 40; ++i) {
      const auto n = 2 + rng() % 10;
      const auto s = oracle::random_matrix(rng, n, n);
      CHECK(witness_norm(identity_witness(s)) >= star_norm_floor(s) - 1e-6);
    }
    for (std::size_t p : {2, 3, 5}) {
      const auto s = projective_incidence(p, 2);
      CHECK(witness_norm(regular_witness(s)) >= star_norm_floor(s) - 1e-6);
    }
  }
}
