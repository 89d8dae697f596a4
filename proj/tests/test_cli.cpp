#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdom/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bdom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::filesystem::path kFixtures{BDOM_FIXTURE_DIR};

}  // namespace

TEST_CASE("counting subcommands") {
  CHECK(run({"shell", "2", "3"}).out == "12\n");
  CHECK(run({"ball", "4", "3"}).out == "129\n");
  CHECK(run({"delannoy", "3", "3"}).out == "63\n");
  CHECK(run({"coverage", "2", "4", "2"}).out == "38\n");
  CHECK(run({"max-d", "2", "4", "2"}).out == "19\n");
  CHECK(run({"lower-bound", "--dims", "5,5", "3", "2"}).out == "3\n");

  const auto listed = run({"shell", "2", "1", "--list"});
  CHECK(listed.code == 0);
  CHECK(listed.out.find("(-1,0)") != std::string::npos);
  CHECK(listed.out.find("(1,0)") != std::string::npos);

  const auto gf = run({"--format", "json", "genfunc", "S_fixed_n", "--fixed", "2", "--max", "3"});
  REQUIRE(gf.code == 0);
  const auto j = nlohmann::json::parse(gf.out);
  CHECK(j.dump().find(R"(["1","4","8","12"])") != std::string::npos);

  const auto bij = run({"--format", "json", "bijection", "--point=-1,0,1,-1", "--d", "3"});
  REQUIRE(bij.code == 0);
  CHECK(nlohmann::json::parse(bij.out).dump().find("[-1,2,-1]") != std::string::npos);
}

TEST_CASE("json encodes counts as decimal strings") {
  const auto r = run({"--format", "json", "ball", "10", "10"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("count") == "8097453");
  CHECK(j.at("command") == "ball");
}

TEST_CASE("tower subcommands") {
  const auto search = run({"-q", "tower-search", "4", "2"});
  CHECK(search.code == 0);
  CHECK(search.out == "d=18 e=5\n");
  CHECK(search.err.empty());

  CHECK(run({"tower-check", "4", "2", "18", "5"}).code == 0);
  CHECK(run({"tower-check", "4", "2", "19", "3"}).code == 1);

  const auto table = run({"tower-table", "4", "2", "18", "5"});
  CHECK(table.code == 0);
  std::istringstream lines(table.out);
  std::string line, sum;
  while (std::getline(lines, line)) {
    if (line.rfind("Sum", 0) == 0 || line.find(" Sum") != std::string::npos) sum = line;
  }
  std::istringstream cells(sum);
  std::string label, bar;
  cells >> label >> bar;
  CHECK(label == "Sum");
  CHECK(bar == "|");
  std::vector<int> values;
  for (int v; cells >> v;) values.push_back(v);
  CHECK(values == std::vector<int>{4, 3, 2, 3, 2, 3, 2, 2, 2, 2, 2, 2, 2, 3, 2, 3, 2, 3});

  const auto csv = run({"--format", "csv", "tower-table", "4", "2", "18", "5"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("Sum") != std::string::npos);
}

TEST_CASE("table3 matches the checked-in fixture") {
  const auto r = run({"-q", "table3", "--tmax", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(kFixtures / "table3_tmax9.txt"));
}

TEST_CASE("progress goes to the diagnostic stream") {
  const auto r = run({"tower-search", "3", "2"});
  CHECK(r.out == "d=8 e=3\n");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("lattice subcommands") {
  CHECK(run({"lattice-check", "4", "2", "--basis", "18,0;5,1"}).code == 0);
  CHECK(run({"lattice-check", "1", "1", "--basis", "2,0;0,2"}).code == 1);
  CHECK(run({"lattice-check", "1", "1", "--basis", "2,0;4,0"}).code == 2);
  CHECK(run({"-q", "lattice-search3d", "2", "2", "--cap", "10"}).out == "d=4 e1=1 e2=2\n");
  CHECK(run({"-q", "lattice-search3d", "2", "1"}).out == "d=7 e1=2 e2=3\n");
}

TEST_CASE("graph subcommands") {
  const auto g = run({"gamma", "C4*C4", "3", "2"});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("gamma_{3,2}(C4*C4) = 2\n", 0) == 0);

  const auto j = nlohmann::json::parse(run({"--format", "json", "gamma", "C4*C4", "3", "2"}).out);
  CHECK(j.at("gamma") == 2);
  CHECK(j.at("status") == "exact");
  CHECK(j.at("expression") == "C4*C4");
  CHECK(j.at("params").at("t") == 3);
  CHECK(j.at("witness").size() == 2);

  CHECK(run({"gamma", "P9*P9", "2", "2", "--budget", "20"}).code == 1);
  CHECK(run({"reception", "P5*P5", "3", "2", "--set", "1,3;3,1;3,5;5,3"}).code == 0);
  CHECK(run({"reception", "P5*P5", "3", "2", "--set", "1,1;1,5;5,1;5,5"}).code == 1);

  CHECK(run({"verify-lemma2", "3", "2"}).code == 0);
  CHECK(run({"verify-lemma2", "2", "2"}).code == 0);
  CHECK(run({"verify-torus", "5", "3"}).code == 0);
  CHECK(run({"verify-torus", "3", "1"}).code == 2);

  const auto viz = run({"--format", "json", "vizing-scan", "--pairs", (kFixtures / "vizing_pairs.txt").string(), "3", "2"});
  CHECK(viz.code == 0);
  const auto vj = nlohmann::json::parse(viz.out);
  CHECK(vj.dump().find("C3") != std::string::npos);
}

TEST_CASE("errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"shell", "2"}).code == 2);
  CHECK(run({"coverage", "2", "2", "4"}).code == 2);
  CHECK(run({"--format", "xml", "shell", "2", "3"}).code == 2);
  const auto bad = run({"gamma", "C4*", "3", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 3") != std::string::npos);
  CHECK(run({"genfunc", "B_fixed_d", "--max", "3"}).code == 2);
  CHECK(run({"vizing-scan", "--pairs", "/nonexistent/pairs.txt", "3", "2"}).code == 2);
}

TEST_CASE("json output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "json", "gamma", "P4*P4", "3", "2"},
      {"--format", "json", "-q", "tower-search", "5", "3"},
      {"--format", "json", "tower-table", "4", "2", "18", "5"},
      {"--format", "json", "verify-torus", "4", "3"},
      {"--format", "json", "genfunc", "B_bivariate", "--max", "4"},
      {"--format", "json", "--threads", "3", "-q", "lattice-search3d", "2", "1"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).count("generated_at") == 0);
  }
  auto stamped = commands.front();
  stamped.insert(stamped.begin(), "--timestamp");
  CHECK(nlohmann::json::parse(run(stamped).out).count("generated_at") == 1);
}

TEST_CASE("output file option") {
  const auto path = std::filesystem::temp_directory_path() / "bdom_cli_test_output.txt";
  std::filesystem::remove(path);
  const auto r = run({"-o", path.string(), "shell", "2", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == "12\n");
  std::filesystem::remove(path);
}
