#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "signrank/embeddings.hpp"
#include "signrank/errors.hpp"
#include "signrank/stabbing.hpp"

namespace signrank {

namespace {

void note_spectrum(BoundReport& report, const SpectrumSummary& summary) {
  report.spectral_converged = report.spectral_converged && summary.converged;
  report.spectral_residual = std::max(report.spectral_residual, summary.residual);
}

}  // namespace

BoundReport signrank_bracket(const SignMatrix& s, const BracketOptions& opts) {
  BoundReport report;
  report.instance = opts.instance;
  report.n_rows = s.rows();
  report.n_cols = s.cols();

  const SignMatrix distinct = distinct_rows(s);
  report.vc = vc_dimension(distinct, opts.limits);
  report.dual = dual_sign_rank(distinct, opts.limits);

  // Lower certificates.
  report.lower.push_back({"dual_sign_rank", static_cast<double>(report.dual)});
  const bool square = s.rows() == s.cols();
  if (square) {
    const auto summary = top_singular_values(to_real(s), opts.power);
    note_spectrum(report, summary);
    report.lower.push_back({"forster_identity", static_cast<double>(s.rows()) / summary.sigma1});
  }
  const auto reg = regularity(s);
  if (reg.degree && *reg.degree >= 1 && 2 * *reg.degree <= s.rows()) {
    const auto spectrum = boolean_spectrum(to_boolean(s), opts.power);
    note_spectrum(report, spectrum);
    report.lower.push_back({"spectral", static_cast<double>(*reg.degree) / spectrum.sigma2});
    const auto witness = regular_witness(s);
    const auto summary = top_singular_values(witness.values, opts.power);
    note_spectrum(report, summary);
    report.lower.push_back({"forster_regular", static_cast<double>(s.rows()) / summary.sigma1});
  }

  // Upper witnesses.
  const std::size_t d = std::max<std::size_t>(report.vc, 1);
  std::mt19937_64 tie_rng(opts.seed);
  const auto welzl = welzl_path(distinct, tie_rng, d);
  report.welzl_max_sc = welzl.ordering.max_sign_changes;
  report.welzl_constant = static_cast<double>(report.welzl_max_sc) /
                          std::pow(static_cast<double>(distinct.rows()), 1.0 - 1.0 / static_cast<double>(d));
  report.upper.push_back({"welzl_path", report.welzl_max_sc + 1, "ordering"});
  if (report.vc <= 1) {
    const auto planar = embed_vc1(distinct);
    if (verify_realization(planar, distinct)) report.upper.push_back({"vc1_embedding", 3, "planar"});
    report.upper.push_back({"vc1_path", vc1_path(distinct).max_sign_changes + 1, "ordering"});
  }
  if (reg.degree) report.upper.push_back({"regular_2delta_plus_1", regular_upper_bound(s), "threshold"});

  double best_lower = 1.0;
  for (const auto& l : report.lower) best_lower = std::max(best_lower, l.value);
  report.lo = std::max<std::size_t>(certificate_ceil(best_lower), 1);
  report.hi = std::min_element(report.upper.begin(), report.upper.end(), [](const auto& a, const auto& b) {
                return a.value < b.value;
              })->value;

  if (opts.run_hinge) {
    std::optional<std::size_t> found;
    for (std::size_t k = report.hi; k-- > report.lo;) {
      if (k < 1 || !hinge_search_upper(s, k, opts.seed, opts.hinge)) break;
      found = k;
    }
    if (found) {
      report.upper.push_back({"hinge_search", *found, "factorization"});
      report.hi = *found;
    }
  }

  if (report.lo > report.hi) throw std::logic_error("sign-rank bracket is inverted: lower certificate exceeds upper witness");
  return report;
}

std::size_t approx_sign_rank(const SignMatrix& s, std::uint64_t seed) {
  const SignMatrix distinct = distinct_rows(s);
  const std::size_t vc = vc_dimension(distinct);
  if (vc <= 1) return vc1_path(distinct).max_sign_changes + 1;
  std::mt19937_64 tie_rng(seed);
  return welzl_path(distinct, tie_rng, vc).ordering.max_sign_changes + 1;
}

}  // namespace signrank
