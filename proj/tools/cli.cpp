#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "signrank/signrank.hpp"

namespace signrank::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t budget = 5'000;
  std::string out;
  std::string format;
};

struct Input {
  std::string path = "-";
  std::string label;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  bool json(bool default_json = true) const { return g_.format.empty() ? default_json : g_.format == "json"; }

  void write(const std::string& content) const {
    if (g_.out.empty()) {
      out_ << content;
      out_.flush();
      return;
    }
    const std::filesystem::path target(g_.out);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      f << content;
      f.flush();
      if (!f) throw InputError("cannot write output file '" + g_.out + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw InputError("cannot write output file '" + g_.out + "'");
    }
  }

  void write(const nlohmann::json& j) const { write(j.dump(2) + "\n"); }

 private:
  const Globals& g_;
  std::ostream& out_;
};

SignMatrix read_matrix(const Input& in) {
  try {
    if (in.path == "-") return parse_sign_matrix(std::cin);
    std::ifstream f(in.path);
    if (!f) throw InputError("cannot open input file");
    return parse_sign_matrix(f);
  } catch (const InputError& e) {
    throw InputError((in.path == "-" ? std::string("<stdin>") : in.path) + ": " + e.what());
  }
}

std::string label_of(const Input& in) {
  if (!in.label.empty()) return in.label;
  if (in.path == "-") return "stdin";
  return std::filesystem::path(in.path).stem().string();
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "Matrix file in '+'/'-' format, '-' for stdin")->required();
  cmd->add_option("--label", in.label, "Instance label for the report");
}

BracketOptions bracket_options(const Globals& g, const Input& in) {
  BracketOptions opts;
  opts.instance = label_of(in);
  opts.seed = g.seed;
  opts.power.tol = g.tol;
  opts.hinge.alternations = g.budget;
  return opts;
}

std::size_t need(const std::optional<std::size_t>& v, const std::string& gen, const char* flag) {
  if (!v) throw InputError("generator '" + gen + "' needs " + flag);
  return *v;
}

struct GenArgs {
  std::string name;
  std::optional<std::size_t> n, d, p;
  bool planted = false;
  std::optional<double> prob;
};

SignMatrix generate(const GenArgs& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (a.name == "signed-identity") return signed_identity(need(a.n, a.name, "--n"));
  if (a.name == "disjointness") return disjointness(need(a.n, a.name, "--n"));
  if (a.name == "projective") return projective_incidence(need(a.p, a.name, "--p"), need(a.d, a.name, "--d"));
  if (a.name == "hamming-ball") return hamming_ball(need(a.n, a.name, "--n"), need(a.d, a.name, "--d")).matrix();
  if (a.name == "grid") return grid_hyperplane(need(a.n, a.name, "--n"), need(a.d, a.name, "--d"));
  if (a.name == "interval") {
    const std::size_t p = need(a.p, a.name, "--p");
    if (!is_prime(p)) throw InputError("order " + std::to_string(p) + " is not prime");
    return interval_class(a.planted ? planted_line_orders(p, rng) : default_line_orders(p)).matrix();
  }
  if (a.name == "line-subset") return line_subset_random(need(a.p, a.name, "--p"), rng, a.prob.value_or(0.5));
  if (a.name == "heavy-free") {
    return heavy_dominant_free_random(need(a.n, a.name, "--n"), need(a.d, a.name, "--d"), rng, a.prob).matrix;
  }
  throw InputError("unknown generator '" + a.name + "'");
}

nlohmann::json matrix_json(const SignMatrix& s) {
  std::vector<std::string> rows;
  std::istringstream text(to_text(s));
  for (std::string line; std::getline(text, line);) rows.push_back(line);
  return {{"n_rows", s.rows()}, {"n_cols", s.cols()}, {"rows", rows}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-rank, VC dimension and stabbing-path analysis of sign matrices", "signrank"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--tol", g.tol, "Power-iteration residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Alternations per restart of the factorization search")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the result to this path (atomically)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a generated sign matrix");
  gen->add_option("generator", gen_args.name, "Generator name")
      ->required()
      ->check(CLI::IsMember({"signed-identity", "disjointness", "projective", "hamming-ball", "grid", "interval",
                             "line-subset", "heavy-free"}));
  gen->add_option("--n", gen_args.n, "Size parameter");
  gen->add_option("--d", gen_args.d, "Dimension parameter");
  gen->add_option("--p", gen_args.p, "Prime order");
  gen->add_flag("--planted", gen_args.planted, "Planted line orders (interval)");
  gen->add_option("--prob", gen_args.prob, "Sampling probability (line-subset, heavy-free)");

  Input analyze_in, bounds_in, approx_in, path_in;
  auto* analyze = app.add_subcommand("analyze", "Bracket plus approximation report");
  add_input(analyze, analyze_in);
  auto* bounds = app.add_subcommand("bounds", "Sign-rank bracket report");
  add_input(bounds, bounds_in);
  auto* approx = app.add_subcommand("approx", "Sign-rank approximation SC + 1");
  add_input(approx, approx_in);
  auto* path = app.add_subcommand("path", "Low sign-change row ordering");
  add_input(path, path_in);
  std::string method = "auto";
  path->add_option("--method", method, "Path construction")->check(CLI::IsMember({"auto", "welzl", "vc1"}));

  std::size_t en_n = 0, en_d = 0;
  std::optional<std::size_t> en_samples, en_size;
  auto* enumerate = app.add_subcommand("enumerate", "Census of concept classes by VC dimension");
  enumerate->add_option("--n", en_n, "Cube dimension N")->required();
  enumerate->add_option("--d", en_d, "VC dimension d")->required();
  enumerate->add_option("--sample", en_samples, "Estimate from this many sampled classes");
  enumerate->add_option("--size", en_size, "Class size for sampling (default: Sauer bound)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const Emitter emit(g, out);
  try {
    if (gen->parsed()) {
      const SignMatrix s = generate(gen_args, g.seed);
      if (emit.json(false)) {
        emit.write(matrix_json(s));
      } else {
        emit.write(to_text(s));
      }
      return kSuccess;
    }

    if (analyze->parsed() || bounds->parsed()) {
      const Input& in = analyze->parsed() ? analyze_in : bounds_in;
      const SignMatrix s = read_matrix(in);
      BoundReport report = signrank_bracket(s, bracket_options(g, in));
      if (analyze->parsed()) report.approx = approx_sign_rank(s, g.seed);
      if (emit.json()) {
        emit.write(to_json(report));
      } else {
        emit.write(to_text(report));
      }
      if (!report.spectral_converged) {
        err << "warning: power iteration did not converge (residual " << report.spectral_residual << ")\n";
        return kNotConverged;
      }
      return kSuccess;
    }

    if (approx->parsed()) {
      const SignMatrix s = read_matrix(approx_in);
      const SignMatrix distinct = distinct_rows(s);
      const std::size_t value = approx_sign_rank(s, g.seed);
      if (emit.json()) {
        emit.write(nlohmann::json{{"instance", label_of(approx_in)},
                                  {"n_rows", s.rows()},
                                  {"n_cols", s.cols()},
                                  {"distinct_rows", distinct.rows()},
                                  {"vc", vc_dimension(distinct)},
                                  {"approx", value}});
      } else {
        emit.write(std::to_string(value) + "\n");
      }
      return kSuccess;
    }

    if (path->parsed()) {
      const SignMatrix s = read_matrix(path_in);
      if (!has_distinct_rows(s)) throw InputError("path needs pairwise distinct rows");
      const std::size_t vc = vc_dimension(s);
      const bool use_vc1 = method == "vc1" || (method == "auto" && vc <= 1);
      nlohmann::json j = {{"instance", label_of(path_in)}, {"vc", vc}};
      RowOrdering ordering;
      if (use_vc1) {
        ordering = vc1_path(s);
        j["method"] = "vc1";
      } else {
        std::mt19937_64 rng(g.seed);
        const auto result = welzl_path(s, rng, std::max<std::size_t>(vc, 1));
        ordering = result.ordering;
        std::vector<double> x;
        for (double v : result.state.x_log) x.push_back(round12(v));
        j["method"] = "welzl";
        j["tree_stabbing"] = result.tree_stabbing;
        j["x_log"] = x;
        j["path_bound"] = round12(welzl_path_bound(s.rows(), result.d));
      }
      if (emit.json()) {
        j["ordering"] = to_json(ordering);
        emit.write(j);
      } else {
        emit.write(to_text(ordering));
      }
      return kSuccess;
    }

    if (enumerate->parsed()) {
      if (en_samples) {
        std::mt19937_64 rng(g.seed);
        const std::size_t size = en_size ? *en_size : static_cast<std::size_t>(sauer_bound(en_n, en_d));
        const auto estimate = sample_census(en_n, en_d, size, *en_samples, rng);
        if (emit.json()) {
          emit.write(to_json(estimate));
        } else {
          emit.write(to_text(estimate));
        }
        return kSuccess;
      }
      if (en_n > 4) {
        throw SizeLimitError("exact census is limited to N <= 4; rerun with --sample <count> to estimate");
      }
      const auto census = enumerate_census(en_n, en_d);
      if (emit.json()) {
        emit.write(to_json(census));
      } else {
        emit.write(to_text(census));
      }
      return kSuccess;
    }
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace signrank::cli
