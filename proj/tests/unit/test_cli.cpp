#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using signrank::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "signrank_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen writes parseable matrices") {
    const auto id = run({"gen", "signed-identity", "--n", "3"});
    CHECK(id.code == 0);
    CHECK(id.out == "+--\n-+-\n--+\n");

    const auto js = run({"--format", "json", "gen", "projective", "--p", "2", "--d", "2"});
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["n_rows"] == 7);
    CHECK(doc["rows"].size() == 7);

    CHECK(run({"gen", "projective", "--p", "4", "--d", "2"}).code == 2);
    CHECK(run({"gen", "nonsense"}).code == 2);
    CHECK(run({"gen", "heavy-free", "--n", "10", "--d", "4"}).code == 2);
  }

  TEST_CASE("bounds report is deterministic") {
    const auto path = scratch("id4.txt");
    write_file(path, "+---\n-+--\n--+-\n---+\n");
    const auto a = run({"--format", "json", "--seed", "5", "bounds", path.string()});
    const auto b = run({"--format", "json", "--seed", "5", "bounds", path.string()});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["instance"] == "id4");
    CHECK(doc["vc"] == 1);
    CHECK(doc["bracket"] == nlohmann::json::array({3, 3}));

    const auto text = run({"bounds", "--label", "named", path.string()});
    CHECK(text.code == 0);
    CHECK(text.out.find("named") != std::string::npos);

    const auto ap = run({"--format", "json", "approx", path.string()});
    CHECK(ap.code == 0);
    CHECK(nlohmann::json::parse(ap.out)["approx"] == 3);
  }

  TEST_CASE("path command") {
    const auto path = scratch("path.txt");
    write_file(path, "+--\n-+-\n--+\n");
    const auto r = run({"--format", "json", "path", "--method", "vc1", path.string()});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ordering"]["max_sign_changes"] <= 2);
    write_file(path, "+-\n+-\n");
    CHECK(run({"path", path.string()}).code == 2);
  }

  TEST_CASE("parse errors report the line") {
    const auto path = scratch("bad.txt");
    write_file(path, "++\n+x\n");
    const auto r = run({"bounds", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    write_file(path, "++\n+\n");
    CHECK(run({"bounds", path.string()}).code == 2);
    CHECK(run({"bounds", scratch("missing.txt").string()}).code == 2);
    CHECK(run({"bounds"}).code == 2);
    CHECK(run({"--format", "yaml", "bounds", path.string()}).code == 2);
  }

  TEST_CASE("enumerate") {
    const auto r = run({"--format", "json", "enumerate", "--n", "2", "--d", "1"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count_exact"] == 10);
    CHECK(doc["maximum_count"] == 4);

    const auto big = run({"enumerate", "--n", "5", "--d", "1"});
    CHECK(big.code == 3);
    CHECK(big.err.find("--sample") != std::string::npos);

    const auto sampled = run({"--format", "json", "enumerate", "--n", "5", "--d", "1", "--sample", "50"});
    CHECK(sampled.code == 0);
    CHECK(nlohmann::json::parse(sampled.out)["mode"] == "sample");
  }

  TEST_CASE("atomic output file") {
    const auto target = scratch("out.json");
    std::filesystem::remove(target);
    const auto r = run({"--format", "json", "--out", target.string(), "gen", "signed-identity", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    REQUIRE(std::filesystem::exists(target));
    CHECK_FALSE(std::filesystem::exists(target.string() + ".tmp"));
    std::ifstream f(target);
    const auto doc = nlohmann::json::parse(f);
    CHECK(doc["n_rows"] == 2);
  }
}
