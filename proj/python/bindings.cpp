#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "signrank/signrank.hpp"

namespace py = pybind11;
using namespace signrank;

namespace {

SignMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) { return SignMatrix::from_rows(rows); }

std::vector<std::vector<int>> matrix_to_rows(const SignMatrix& s) {
  std::vector<std::vector<int>> out(s.rows());
  for (std::size_t r = 0; r < s.rows(); ++r) out[r].assign(s.row(r).begin(), s.row(r).end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sign-rank, VC dimension and stabbing-path analysis of sign matrices";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", input_error.ptr());
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_RuntimeError);

  py::class_<SignMatrix>(m, "SignMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_static("parse", [](const std::string& text) { return parse_sign_matrix(text); })
      .def_static("filled", &SignMatrix::filled)
      .def_property_readonly("rows", &SignMatrix::rows)
      .def_property_readonly("cols", &SignMatrix::cols)
      .def("to_list", &matrix_to_rows)
      .def("to_numpy", [](const SignMatrix& s) { return to_real(s); })
      .def("to_text", [](const SignMatrix& s) { return to_text(s); })
      .def("__getitem__", [](const SignMatrix& s, std::pair<std::size_t, std::size_t> rc) {
        if (rc.first >= s.rows() || rc.second >= s.cols()) throw py::index_error();
        return s(rc.first, rc.second);
      })
      .def("__eq__", &SignMatrix::operator==)
      .def("__repr__", [](const SignMatrix& s) {
        return "<SignMatrix " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) + ">";
      });

  m.def("distinct_rows", &distinct_rows);
  m.def("regular_degree", [](const SignMatrix& s) { return regularity(s).degree; });

  m.def("vc_dimension", [](const SignMatrix& s) { return vc_dimension(s); });
  m.def("dual_sign_rank", [](const SignMatrix& s) { return dual_sign_rank(s); });
  m.def("is_shattered", [](const SignMatrix& s, std::vector<std::size_t> cols) {
    return is_shattered(s, ColumnSet(std::move(cols)));
  });
  m.def("is_antipodally_shattered", [](const SignMatrix& s, std::vector<std::size_t> cols) {
    return is_antipodally_shattered(s, ColumnSet(std::move(cols)));
  });
  m.def("sauer_bound", &sauer_bound);

  py::class_<RowOrdering>(m, "RowOrdering")
      .def_readonly("permutation", &RowOrdering::permutation)
      .def_readonly("sign_changes", &RowOrdering::sign_changes)
      .def_readonly("max_sign_changes", &RowOrdering::max_sign_changes);
  m.def("count_sign_changes", [](const SignMatrix& s, const std::vector<std::size_t>& perm) {
    return count_sign_changes(s, perm);
  });
  m.def(
      "welzl_path",
      [](const SignMatrix& s, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const auto result = welzl_path(s, rng);
        py::dict out;
        out["ordering"] = result.ordering;
        out["d"] = result.d;
        out["x_log"] = result.state.x_log;
        out["tree_stabbing"] = result.tree_stabbing;
        return out;
      },
      py::arg("s"), py::arg("seed") = 0);
  m.def("vc1_path", &vc1_path);
  m.def("sc_star_bruteforce", &sc_star_bruteforce);

  py::class_<SpectrumSummary>(m, "SpectrumSummary")
      .def_readonly("sigma1", &SpectrumSummary::sigma1)
      .def_readonly("sigma2", &SpectrumSummary::sigma2)
      .def_readonly("residual", &SpectrumSummary::residual)
      .def_readonly("iterations", &SpectrumSummary::iterations)
      .def_readonly("converged", &SpectrumSummary::converged);
  m.def("top_singular_values", [](const Eigen::MatrixXd& a) { return top_singular_values(a); });
  m.def("spectral_signrank_lower", [](const SignMatrix& s) { return spectral_signrank_lower(s); });
  m.def("star_norm_floor", &star_norm_floor);

  py::class_<PlanarRealization>(m, "PlanarRealization")
      .def_readonly("points", &PlanarRealization::points)
      .def_property_readonly("halfplanes", [](const PlanarRealization& r) {
        std::vector<std::pair<std::array<double, 2>, double>> out;
        for (const auto& h : r.halfplanes) out.emplace_back(h.normal, h.offset);
        return out;
      });
  py::class_<FactorizationWitness>(m, "FactorizationWitness")
      .def_readonly("rank", &FactorizationWitness::rank)
      .def_readonly("left", &FactorizationWitness::left)
      .def_readonly("right", &FactorizationWitness::right)
      .def_readonly("min_margin", &FactorizationWitness::min_margin);
  m.def("embed_vc1", &embed_vc1);
  m.def("verify_realization", py::overload_cast<const PlanarRealization&, const SignMatrix&>(&verify_realization));
  m.def("verify_factorization",
        py::overload_cast<const FactorizationWitness&, const SignMatrix&>(&verify_realization));
  m.def(
      "hinge_search_upper",
      [](const SignMatrix& s, std::size_t k, std::uint64_t seed, std::size_t restarts, std::size_t alternations) {
        HingeOptions opts;
        opts.restarts = restarts;
        opts.alternations = alternations;
        return hinge_search_upper(s, k, seed, opts);
      },
      py::arg("s"), py::arg("k"), py::arg("seed") = 0, py::arg("restarts") = 20, py::arg("alternations") = 5000);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("instance", &BoundReport::instance)
      .def_readonly("vc", &BoundReport::vc)
      .def_readonly("dual", &BoundReport::dual)
      .def_property_readonly("lower",
                             [](const BoundReport& r) {
                               std::vector<std::pair<std::string, double>> out;
                               for (const auto& l : r.lower) out.emplace_back(l.method, l.value);
                               return out;
                             })
      .def_property_readonly("upper",
                             [](const BoundReport& r) {
                               std::vector<std::pair<std::string, std::size_t>> out;
                               for (const auto& u : r.upper) out.emplace_back(u.method, u.value);
                               return out;
                             })
      .def_property_readonly("bracket", [](const BoundReport& r) { return std::make_pair(r.lo, r.hi); })
      .def_readonly("welzl_max_sc", &BoundReport::welzl_max_sc);
  m.def(
      "signrank_bracket",
      [](const SignMatrix& s, std::uint64_t seed, const std::string& instance) {
        BracketOptions opts;
        opts.seed = seed;
        opts.instance = instance;
        return signrank_bracket(s, opts);
      },
      py::arg("s"), py::arg("seed") = 0, py::arg("instance") = "matrix");
  m.def("approx_sign_rank", &approx_sign_rank, py::arg("s"), py::arg("seed") = 0);

  m.def("signed_identity", &signed_identity);
  m.def("disjointness", &disjointness);
  m.def("projective_incidence", &projective_incidence);
  m.def("hamming_ball", [](std::size_t n, std::size_t d) { return hamming_ball(n, d).matrix(); });
  m.def("grid_hyperplane", &grid_hyperplane);
  m.def(
      "interval_class",
      [](std::size_t p, std::optional<std::uint64_t> planted_seed) {
        if (!planted_seed) return interval_class(default_line_orders(p)).matrix();
        std::mt19937_64 rng(*planted_seed);
        return interval_class(planted_line_orders(p, rng)).matrix();
      },
      py::arg("p"), py::arg("planted_seed") = py::none());
  m.def(
      "line_subset_random",
      [](std::size_t p, std::uint64_t seed, double keep) {
        std::mt19937_64 rng(seed);
        return line_subset_random(p, rng, keep);
      },
      py::arg("p"), py::arg("seed") = 0, py::arg("keep_prob") = 0.5);
  m.def(
      "heavy_dominant_free_random",
      [](std::size_t n, std::size_t d, std::uint64_t seed, std::optional<double> probability) {
        std::mt19937_64 rng(seed);
        auto result = heavy_dominant_free_random(n, d, rng, probability);
        py::dict log;
        log["probability"] = result.log.probability;
        log["ones_sampled"] = result.log.ones_sampled;
        log["ones_final"] = result.log.ones_final;
        log["occurrences"] = result.log.occurrences;
        log["zeros_applied"] = result.log.zeros_applied;
        return py::make_tuple(result.matrix, log);
      },
      py::arg("n"), py::arg("d"), py::arg("seed") = 0, py::arg("probability") = py::none());

  py::class_<CensusResult>(m, "CensusResult")
      .def_readonly("n", &CensusResult::n)
      .def_readonly("d", &CensusResult::d)
      .def_readonly("count_exact", &CensusResult::count_exact)
      .def_readonly("count_at_most", &CensusResult::count_at_most)
      .def_readonly("maximum_count", &CensusResult::maximum_count)
      .def_readonly("all_maximum_connected", &CensusResult::all_maximum_connected)
      .def_readonly("by_vc", &CensusResult::by_vc);
  m.def("enumerate_census", &enumerate_census);
  m.def(
      "sample_census",
      [](std::size_t n, std::size_t d, std::size_t class_size, std::size_t samples, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const auto e = sample_census(n, d, class_size, samples, rng);
        return py::make_tuple(e.fraction, e.radius);
      },
      py::arg("n"), py::arg("d"), py::arg("class_size"), py::arg("samples"), py::arg("seed") = 0);
}
