#include "signrank/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "signrank/errors.hpp"

namespace signrank {

namespace {

constexpr double kRealizationMargin = 1e-12;
constexpr double kUnitTolerance = 1e-9;

struct Event {
  enum Kind { point, arc_start, arc_end } kind;
  std::size_t index;
};

struct Elimination {
  std::size_t pivot;
  std::size_t unique_row;
  std::optional<std::size_t> twin;
};

bool constant_on(const SignMatrix& s, const std::vector<std::size_t>& rows, std::size_t c) {
  return std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return s(r, c) == s(rows[0], c); });
}

void check_dims(const PlanarRealization& r, const SignMatrix& s) {
  if (r.points.size() != s.rows() || r.halfplanes.size() != s.cols()) {
    throw InputError("realization dimensions do not match the sign matrix");
  }
}

void check_dims(const FactorizationWitness& w, const SignMatrix& s) {
  if (w.left.rows() != static_cast<Eigen::Index>(s.rows()) || w.right.rows() != static_cast<Eigen::Index>(s.cols()) ||
      w.left.cols() != w.right.cols()) {
    throw InputError("factorization dimensions do not match the sign matrix");
  }
}

}  // namespace

PlanarRealization embed_vc1(const SignMatrix& s) {
  if (!has_distinct_rows(s)) throw InputError("embed_vc1 requires pairwise distinct rows");
  if (vc_dimension(s) > 1) throw PreconditionError("embed_vc1 requires VC dimension at most 1");

  std::vector<std::size_t> rows(s.rows());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<std::size_t> cols(s.cols());
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<Elimination> steps;

  for (;;) {
    std::erase_if(cols, [&](std::size_t c) { return constant_on(s, rows, c); });
    if (cols.empty()) break;

    std::size_t pivot = cols[0];
    std::size_t best = rows.size();
    for (auto c : cols) {
      std::size_t ones = 0;
      for (auto r : rows) ones += s.positive(r, c);
      const std::size_t minority = std::min(ones, rows.size() - ones);
      if (minority < best) {
        best = minority;
        pivot = c;
      }
    }
    if (best != 1) throw PreconditionError("no column isolates a single row; VC dimension exceeds 1");

    std::size_t ones = 0;
    for (auto r : rows) ones += s.positive(r, pivot);
    const bool minority_positive = (ones == 1);
    const std::size_t unique_row =
        *std::find_if(rows.begin(), rows.end(), [&](std::size_t r) { return s.positive(r, pivot) == minority_positive; });

    std::optional<std::size_t> twin;
    for (auto r : rows) {
      if (r == unique_row) continue;
      if (std::all_of(cols.begin(), cols.end(),
                      [&](std::size_t c) { return c == pivot || s(r, c) == s(unique_row, c); })) {
        twin = r;
        break;
      }
    }
    steps.push_back({pivot, unique_row, twin});
    std::erase(cols, pivot);
    if (twin) std::erase(rows, *twin);
  }

  // Cyclic event order; each pivot's arc encloses exactly its unique row.
  std::vector<Event> seq{{Event::point, rows[0]}};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    auto pos = std::find_if(seq.begin(), seq.end(),
                            [&](const Event& e) { return e.kind == Event::point && e.index == it->unique_row; });
    const auto at = static_cast<std::size_t>(pos - seq.begin());
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at), {Event::arc_start, it->pivot});
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at + 2), {Event::arc_end, it->pivot});
    if (it->twin) seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at + 3), {Event::point, *it->twin});
  }

  const double step = 2.0 * std::numbers::pi / static_cast<double>(seq.size());
  PlanarRealization out;
  out.points.resize(s.rows());
  out.halfplanes.resize(s.cols());
  std::vector<double> start(s.cols(), 0.0), end(s.cols(), 0.0);
  std::vector<char> has_arc(s.cols(), 0);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const double theta = step * static_cast<double>(k);
    switch (seq[k].kind) {
      case Event::point:
        out.points[seq[k].index] = {std::cos(theta), std::sin(theta)};
        break;
      case Event::arc_start:
        start[seq[k].index] = theta;
        has_arc[seq[k].index] = 1;
        break;
      case Event::arc_end:
        end[seq[k].index] = theta;
        break;
    }
  }

  for (std::size_t c = 0; c < s.cols(); ++c) {
    Halfplane h;
    if (has_arc[c]) {
      const auto it = std::find_if(steps.begin(), steps.end(), [&](const Elimination& e) { return e.pivot == c; });
      const double inside = s(it->unique_row, c);
      const double mid = 0.5 * (start[c] + end[c]);
      const double half = 0.5 * (end[c] - start[c]);
      h.normal = {inside * std::cos(mid), inside * std::sin(mid)};
      h.offset = -inside * std::cos(half);
    } else {
      h.normal = {1.0, 0.0};
      h.offset = s(0, c) > 0 ? 2.0 : -2.0;
    }
    out.halfplanes[c] = h;
  }

  if (!verify_realization(out, s)) throw std::logic_error("embed_vc1 produced an invalid realization");
  return out;
}

double realization_margin(const PlanarRealization& r, const SignMatrix& s) {
  check_dims(r, s);
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const auto& p = r.points[i];
    for (std::size_t c = 0; c < s.cols(); ++c) {
      const auto& h = r.halfplanes[c];
      const double v = h.normal[0] * p[0] + h.normal[1] * p[1] + h.offset;
      margin = std::min(margin, s(i, c) * v);
    }
  }
  return margin;
}

double factorization_margin(const FactorizationWitness& w, const SignMatrix& s) {
  check_dims(w, s);
  const Eigen::MatrixXd m = w.left * w.right.transpose();
  return m.cwiseProduct(to_real(s)).minCoeff();
}

bool verify_realization(const PlanarRealization& r, const SignMatrix& s) {
  check_dims(r, s);
  for (const auto& p : r.points) {
    if (!(std::abs(std::hypot(p[0], p[1]) - 1.0) <= kUnitTolerance)) return false;
  }
  const double margin = realization_margin(r, s);
  return std::isfinite(margin) && margin >= kRealizationMargin;
}

bool verify_realization(const FactorizationWitness& w, const SignMatrix& s) {
  check_dims(w, s);
  if (!w.left.allFinite() || !w.right.allFinite()) return false;
  return factorization_margin(w, s) > 0.0;
}

FactorizationWitness to_factorization(const PlanarRealization& r, const SignMatrix& s) {
  check_dims(r, s);
  FactorizationWitness w;
  w.rank = 3;
  w.left.resize(static_cast<Eigen::Index>(s.rows()), 3);
  w.right.resize(static_cast<Eigen::Index>(s.cols()), 3);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    w.left.row(static_cast<Eigen::Index>(i)) << r.points[i][0], r.points[i][1], 1.0;
  }
  for (std::size_t c = 0; c < s.cols(); ++c) {
    const auto& h = r.halfplanes[c];
    w.right.row(static_cast<Eigen::Index>(c)) << h.normal[0], h.normal[1], h.offset;
  }
  w.min_margin = factorization_margin(w, s);
  return w;
}

}  // namespace signrank
