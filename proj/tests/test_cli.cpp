#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "sgardner_test_cli";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path log = kWork / "stdout.txt";
  const std::string cmd = std::string(SGARDNER_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string path(const std::string& name) { return (kWork / name).string(); }

std::string config(const std::string& name) { return std::string(SGARDNER_CONFIGS) + "/" + name; }

} // namespace

TEST_CASE("shock profile sampled through the command line") {
  REQUIRE(run("build --config " + config("shock.json") + " --out " + path("shock.json")).code == 0);
  const Run r = run("sample --tau " + path("shock.json") +
                    " --xmin -10 --xmax 10 --nx 101 --tmin 0 --tmax 0.5 --nt 2 --out " + path("shock.csv"));
  REQUIRE(r.code == 0);
  std::istringstream csv(read(path("shock.csv")));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "X,T,monomial,re,im");
  const double sigma = -2.0, k = 2.0;
  const double w = dispersion(k, sigma, Regime::defocusing).real();
  std::size_t checked = 0;
  double worst = 0.0;
  while (std::getline(csv, line)) {
    std::stringstream fields(line);
    std::string x, t, m, re, im;
    std::getline(fields, x, ',');
    std::getline(fields, t, ',');
    std::getline(fields, m, ',');
    std::getline(fields, re, ',');
    std::getline(fields, im, ',');
    if (m != "theta" || std::stod(t) != 0.0) continue;
    const double eta = k * std::stod(x) + w * std::stod(t);
    const double expected = 0.5 * (-sigma) * (1.0 + std::tanh(eta / 2.0 + std::log(2.0) / 2.0));
    worst = std::max(worst, std::abs(std::stod(re) - expected) + std::abs(std::stod(im)));
    ++checked;
  }
  CHECK(checked == 101);
  CHECK(worst <= 1e-12);
}

TEST_CASE("every kind and regime builds and verifies") {
  struct Case {
    std::string regime, kind, ks, sigma;
  };
  const std::vector<Case> cases{{"focusing", "soliton", "1,2,3", "1"},
                                {"defocusing", "soliton", "1,2,3", "4"},
                                {"defocusing", "shock", "2", "-2"},
                                {"focusing", "rational", "1", "1"},
                                {"focusing", "mixed-rational-soliton", "0.3,1", "1"},
                                {"defocusing", "mixed-shock-soliton", "1,2", "-2"}};
  for (const auto& c : cases) {
    INFO(c.kind << " " << c.regime);
    const std::string tau = path(c.kind + "_" + c.regime + ".json");
    REQUIRE(run("build --config " + config("focusing3.json") + " --regime " + c.regime + " --kind " + c.kind +
                " --sigma " + c.sigma + " --k " + c.ks + " --out " + tau)
                .code == 0);
    CHECK(run("verify bilinear --tau " + tau).code == 0);
    CHECK(run("verify bilinear --tau " + tau + " --frame xt").code == 0);
    CHECK(run("verify pde --tau " + tau).code == 0);
    CHECK(run("verify pde --tau " + tau + " --form potential").code == 0);
  }
  // invalid combination
  CHECK(run("build --config " + config("shock.json") + " --regime focusing --out " + path("bad.json")).code == 2);
}

TEST_CASE("corrupted tau fails verification") {
  REQUIRE(run("build --config " + config("focusing3.json") + " --out " + path("f3.json")).code == 0);
  auto j = io::read_json_file(path("f3.json"));
  j["f"]["terms"][1]["coeff"][0]["re"] = j["f"]["terms"][1]["coeff"][0]["re"].get<double>() + 0.25;
  io::write_text_file(path("corrupt.json"), j.dump());
  const Run r = run("verify bilinear --tau " + path("corrupt.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(run("verify pde --tau " + path("corrupt.json")).code == 1);
}

TEST_CASE("identities, limit and asymptotics commands") {
  const Run r = run("verify identities --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("20/20") != std::string::npos);
  CHECK(run("limit --sigma 1 --k0 1 --eps 0.1,0.01,0.001").code == 0);
  REQUIRE(run("build --config " + config("focusing3.json") +
              " --kind mixed-rational-soliton --k 0.3,1 --out " + path("mixed.json"))
              .code == 0);
  const Run a = run("asymptotics --tau " + path("mixed.json") + " --times -50,50");
  CHECK(a.out.find("rational frame pass") != std::string::npos);
}

TEST_CASE("usage errors") {
  const Run unknown = run("nope");
  CHECK(unknown.code == 2);
  CHECK(unknown.out.find("unknown command") != std::string::npos);
  CHECK(run("verify bilinear --tau " + path("does_not_exist.json")).code == 2);
  CHECK(run("build --out " + path("x.json")).code == 2);
  CHECK(run("sample --tau " + path("shock.json") + " --xmin 1 --xmax 0 --nx 5 --tmin 0 --tmax 1 --nt 5 --out " +
            path("x.csv"))
            .code == 2);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (int i = 0; i < 2; ++i) {
    const std::string s = std::to_string(i);
    REQUIRE(run("build --config " + config("focusing3.json") + " --out " + path("det" + s + ".json")).code == 0);
    REQUIRE(run("sample --tau " + path("det" + s + ".json") +
                " --xmin -3 --xmax 3 --nx 7 --tmin -1 --tmax 1 --nt 3 --out " + path("det" + s + ".csv"))
                .code == 0);
    REQUIRE(run("verify pde --tau " + path("det" + s + ".json") + " --seed 3 --out " + path("pde" + s + ".json")).code ==
            0);
    REQUIRE(run("verify identities --seed 7 --out " + path("id" + s + ".json")).code == 0);
  }
  for (const std::string stem : {"det", "pde", "id"}) CHECK(read(path(stem + "0.json")) == read(path(stem + "1.json")));
  CHECK(read(path("det0.csv")) == read(path("det1.csv")));
  CHECK_FALSE(read(path("det0.csv")).empty());
}
