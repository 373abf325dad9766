#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "signrank/embeddings.hpp"
#include "signrank/errors.hpp"
#include "signrank/generators.hpp"
#include "signrank/stabbing.hpp"

using namespace signrank;

namespace {

std::size_t lower_of(const BoundReport& r) { return r.lo; }

}  // namespace

TEST_SUITE("embeddings") {
  TEST_CASE("vc1 embedding of named matrices") {
    const auto id4 = signed_identity(4);
    const auto r = embed_vc1(id4);
    CHECK(verify_realization(r, id4));
    for (const auto& p : r.points) CHECK(std::hypot(p[0], p[1]) == doctest::Approx(1.0));

    const auto pm = SignMatrix::from_rows({{1}, {-1}});
    CHECK(verify_realization(embed_vc1(pm), pm));
    CHECK(verify_realization(embed_vc1(SignMatrix::filled(1, 3, -1)), SignMatrix::filled(1, 3, -1)));
    CHECK_THROWS_AS(embed_vc1(disjointness(2)), PreconditionError);
    CHECK_THROWS_AS(embed_vc1(SignMatrix::from_rows({{1}, {1}})), InputError);
  }

  TEST_CASE("vc1 embedding on random instances") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
      const auto s = oracle::random_vc1(rng, 1 + rng() % 12, 1 + rng() % 10);
      REQUIRE(oracle::vc(s) <= 1);
      const auto r = embed_vc1(s);
      CHECK(verify_realization(r, s));
      CHECK(realization_margin(r, s) >= 1e-12);
      const auto w = to_factorization(r, s);
      CHECK(w.rank == 3);
      CHECK(verify_realization(w, s));
      CHECK(w.min_margin > 0.0);
    }
  }

  TEST_CASE("verification rejects broken witnesses") {
    const auto id4 = signed_identity(4);
    auto r = embed_vc1(id4);
    r.halfplanes[0].normal[0] = -r.halfplanes[0].normal[0];
    r.halfplanes[0].normal[1] = -r.halfplanes[0].normal[1];
    r.halfplanes[0].offset = -r.halfplanes[0].offset;
    CHECK_FALSE(verify_realization(r, id4));

    auto scaled = embed_vc1(id4);
    scaled.points[0] = {2.0, 0.0};
    CHECK_FALSE(verify_realization(scaled, id4));

    FactorizationWitness zero{1, Eigen::MatrixXd::Ones(2, 1), Eigen::MatrixXd::Zero(2, 1), 0.0};
    CHECK_FALSE(verify_realization(zero, SignMatrix::filled(2, 2, 1)));
    FactorizationWitness ok{1, Eigen::MatrixXd::Ones(2, 1), Eigen::MatrixXd::Ones(2, 1), 1.0};
    CHECK(verify_realization(ok, SignMatrix::filled(2, 2, 1)));
    CHECK_THROWS_AS(verify_realization(ok, SignMatrix::filled(3, 2, 1)), InputError);
    CHECK_THROWS_AS(verify_realization(embed_vc1(id4), signed_identity(3)), InputError);
  }

  TEST_CASE("hinge search") {
    const auto plus = SignMatrix::filled(4, 4, 1);
    const auto w1 = hinge_search_upper(plus, 1, 0);
    REQUIRE(w1.has_value());
    CHECK(verify_realization(*w1, plus));

    const auto id4 = signed_identity(4);
    const auto w3 = hinge_search_upper(id4, 3, 0);
    REQUIRE(w3.has_value());
    CHECK(verify_realization(*w3, id4));
    CHECK(w3->rank == 3);
    CHECK_FALSE(hinge_search_upper(id4, 2, 0).has_value());
    CHECK_THROWS_AS(hinge_search_upper(id4, 0, 0), InputError);

    const auto again = hinge_search_upper(id4, 3, 0);
    CHECK(again->left == w3->left);
  }

  TEST_CASE("bracket closures") {
    const auto id = signrank_bracket(signed_identity(4));
    CHECK(id.vc == 1);
    CHECK(id.dual == 3);
    CHECK(id.lo == 3);
    CHECK(id.hi == 3);

    const auto plus = signrank_bracket(SignMatrix::filled(4, 4, 1));
    CHECK(plus.lo == 1);
    CHECK(plus.hi == 1);

    const auto dj = signrank_bracket(disjointness(2));
    CHECK(dj.lo == 3);
    CHECK(dj.hi == 3);

    const auto hb = signrank_bracket(hamming_ball(5, 1).matrix());
    CHECK(hb.lo == 3);
    CHECK(hb.hi == 3);
  }

  TEST_CASE("projective plane bracket") {
    const auto r = signrank_bracket(projective_incidence(3, 2));
    CHECK(r.vc == 2);
    bool spectral = false, regular = false;
    for (const auto& l : r.lower) {
      if (l.method == "spectral") {
        spectral = true;
        CHECK(l.value == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-6));
      }
    }
    for (const auto& u : r.upper) {
      if (u.method == "regular_2delta_plus_1") {
        regular = true;
        CHECK(u.value == 9);
      }
    }
    CHECK(spectral);
    CHECK(regular);
    CHECK(r.lo >= 3);
    CHECK(r.hi <= 9);
    CHECK(r.lo <= r.hi);
  }

  TEST_CASE("approximation") {
    CHECK(approx_sign_rank(signed_identity(4)) == 3);
    CHECK(approx_sign_rank(SignMatrix::filled(5, 5, 1)) == 1);
    const auto pg = projective_incidence(3, 2);
    const auto v = approx_sign_rank(pg, 3);
    CHECK(v >= 3);
    CHECK(static_cast<double>(v) <= 200.0 * std::sqrt(13.0) + 1.0);
    CHECK(v >= lower_of(signrank_bracket(pg)));
  }

  TEST_CASE("bracket soundness on random matrices") {
    std::mt19937_64 rng(52);
    BracketOptions opts;
    opts.hinge.restarts = 4;
    opts.hinge.alternations = 500;
    for (int i = 0; i < 40; ++i) {
      const auto n = 2 + rng() % 7;
      const auto s = oracle::random_matrix(rng, n, n);
      opts.seed = rng();
      const auto r = signrank_bracket(s, opts);
      CHECK(r.lo <= r.hi);
      const auto approx = approx_sign_rank(s, opts.seed);
      CHECK(approx >= r.lo);
      const auto d = r.vc;
      if (d <= 1) {
        CHECK(approx <= 3);
      } else {
        CHECK(static_cast<double>(approx) <= welzl_path_bound(distinct_rows(s).rows(), d) + 1.0);
      }
    }
  }
}
