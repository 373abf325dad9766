#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace signrank::cli {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const BoundReport& report) {
  using nlohmann::json;
  json lower = json::array();
  for (const auto& l : report.lower) lower.push_back({{"method", l.method}, {"value", round12(l.value)}});
  json upper = json::array();
  for (const auto& u : report.upper) {
    upper.push_back({{"method", u.method}, {"value", u.value}, {"witness", u.witness}});
  }
  json j = {
      {"instance", report.instance},
      {"n_rows", report.n_rows},
      {"n_cols", report.n_cols},
      {"vc", report.vc},
      {"dual", report.dual},
      {"lower", lower},
      {"upper", upper},
      {"bracket", {report.lo, report.hi}},
      {"welzl", {{"max_sc", report.welzl_max_sc}, {"constant_observed", round12(report.welzl_constant)}}},
      {"spectral", {{"converged", report.spectral_converged}, {"residual", round12(report.spectral_residual)}}},
  };
  if (report.approx) j["approx"] = *report.approx;
  return j;
}

nlohmann::json to_json(const CensusResult& census) {
  return {
      {"mode", "exact"},
      {"n", census.n},
      {"d", census.d},
      {"count_exact", census.count_exact},
      {"count_at_most", census.count_at_most},
      {"maximum_count", census.maximum_count},
      {"all_maximum_connected", census.all_maximum_connected},
      {"by_vc", census.by_vc},
  };
}

nlohmann::json to_json(const CensusEstimate& estimate) {
  return {
      {"mode", "sample"},
      {"n", estimate.n},
      {"d", estimate.d},
      {"class_size", estimate.class_size},
      {"samples", estimate.samples},
      {"hits", estimate.hits},
      {"fraction", round12(estimate.fraction)},
      {"radius", round12(estimate.radius)},
  };
}

nlohmann::json to_json(const RowOrdering& ordering) {
  return {
      {"permutation", ordering.permutation},
      {"sign_changes", ordering.sign_changes},
      {"max_sign_changes", ordering.max_sign_changes},
  };
}

std::string to_text(const BoundReport& report) {
  std::ostringstream os;
  os.precision(12);
  os << "instance: " << report.instance << '\n'
     << "size: " << report.n_rows << 'x' << report.n_cols << '\n'
     << "vc: " << report.vc << '\n'
     << "dual sign rank: " << report.dual << '\n';
  for (const auto& l : report.lower) os << "lower " << l.method << ": " << round12(l.value) << '\n';
  for (const auto& u : report.upper) os << "upper " << u.method << ": " << u.value << " (" << u.witness << ")\n";
  os << "bracket: [" << report.lo << ", " << report.hi << "]\n"
     << "welzl: max_sc " << report.welzl_max_sc << ", constant " << round12(report.welzl_constant) << '\n';
  if (!report.spectral_converged) os << "spectral: not converged, residual " << round12(report.spectral_residual) << '\n';
  if (report.approx) os << "approx: " << *report.approx << '\n';
  return os.str();
}

std::string to_text(const CensusResult& census) {
  std::ostringstream os;
  os << "N=" << census.n << " d=" << census.d << '\n'
     << "count_exact: " << census.count_exact << '\n'
     << "count_at_most: " << census.count_at_most << '\n'
     << "maximum_count: " << census.maximum_count << '\n'
     << "all_maximum_connected: " << (census.all_maximum_connected ? "yes" : "no") << '\n'
     << "by_vc:";
  for (auto c : census.by_vc) os << ' ' << c;
  os << '\n';
  return os.str();
}

std::string to_text(const CensusEstimate& estimate) {
  std::ostringstream os;
  os.precision(12);
  os << "N=" << estimate.n << " d=" << estimate.d << " size=" << estimate.class_size << '\n'
     << "fraction: " << round12(estimate.fraction) << " +- " << round12(estimate.radius) << " (" << estimate.hits
     << '/' << estimate.samples << ")\n";
  return os.str();
}

std::string to_text(const RowOrdering& ordering) {
  std::ostringstream os;
  os << "permutation:";
  for (auto r : ordering.permutation) os << ' ' << r;
  os << "\nsign_changes:";
  for (auto c : ordering.sign_changes) os << ' ' << c;
  os << "\nmax_sign_changes: " << ordering.max_sign_changes << '\n';
  return os.str();
}

}  // namespace signrank::cli
