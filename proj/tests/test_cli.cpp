#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "tautsys/cli.hpp"
#include "tautsys/json_io.hpp"

using namespace tautsys;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("tautsys-cli-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("period prints a series with leading coefficient one") {
  const Outcome r = invoke({"period", "--variety", "p:2", "--order", "2"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["N"] == 10);
  CHECK(j["T"] == 2);
  const SparseSeries s = series_from_json(j);
  CHECK(s.coefficient(ExpVec::unit(0, -1)) == 1);
  CHECK(r.out == canonical_dump(j));
}

TEST_CASE("period methods agree for projective space") {
  const Outcome lattice = invoke({"period", "--variety", "p:2", "--order", "4", "--method", "lattice"});
  const Outcome chart = invoke({"period", "--variety", "p:2", "--order", "4", "--method", "chart"});
  REQUIRE(lattice.code == kExitOk);
  CHECK(lattice.out == chart.out);
}

TEST_CASE("closed form through the command line") {
  const Outcome chart = invoke({"period", "--variety", "g:2,4", "--order", "2"});
  const Outcome closed =
      invoke({"period", "--variety", "g:2,4", "--order", "2", "--method", "closed-form-g24"});
  REQUIRE(closed.code == kExitOk);
  CHECK(closed.out == chart.out);
  const Outcome other = invoke({"period", "--variety", "g:2,4", "--order", "2", "--method", "closed-form-g24",
                                "--reading", "ambient-dimension"});
  CHECK(other.code == kExitOk);
  CHECK(other.out != chart.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"period", "--variety", "q:7"}).code == kExitUsage);
  CHECK(invoke({"period", "--variety", "p:2", "--order", "-1"}).code == kExitUsage);
  CHECK(invoke({"period", "--variety", "p:2", "--method", "magic"}).code == kExitUsage);
  CHECK(invoke({"period", "--variety", "g:2,4", "--method", "closed-form-g24", "--reading", "x"}).code == kExitUsage);
  CHECK(invoke({"period", "--variety", "p:5", "--ci", "2,3"}).code == kExitUsage);
  CHECK(invoke({"build", "--variety", "f:1,2;3", "--ci", "2"}).code == kExitUsage);
  CHECK(invoke({"verify", "--system", "/nonexistent.json", "--series", "/nonexistent.json"}).code == kExitUsage);
  CHECK(invoke({"volform", "check", "--variety", "p:3"}).code == kExitOk);
  CHECK(invoke({"volform", "check", "--variety", "f:1,2;3"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("build and verify round-trip through files") {
  TempDir dir;
  const std::string sys = dir.file("system.json"), series = dir.file("series.json"), report = dir.file("report.json");
  REQUIRE(invoke({"build", "--variety", "p:2", "--out", sys}).code == kExitOk);
  REQUIRE(invoke({"period", "--variety", "p:2", "--order", "5", "--out", series}).code == kExitOk);
  const Outcome ok = invoke({"verify", "--system", sys, "--series", series, "--out", report});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.empty());
  CHECK(ok.err.find("euler: 1/1 pass") != std::string::npos);
  const Json j = Json::parse(slurp(report));
  CHECK(j["pass"] == true);
  CHECK(j["lie_closure"]["failures"].empty());
}

TEST_CASE("verify reports the first failure and exits with 1") {
  TempDir dir;
  const std::string sys = dir.file("system.json"), series = dir.file("series.json");
  REQUIRE(invoke({"build", "--variety", "p:2", "--out", sys}).code == kExitOk);
  Json s = Json::parse(invoke({"period", "--variety", "p:2", "--order", "3"}).out);
  // Corrupt the first coefficient beyond the leading one.
  for (auto& c : s["coeffs"])
    if (c["exp"].size() >= 2) {
      c["num"] = "12345";
      break;
    }
  std::ofstream(series) << s.dump();
  const Outcome bad = invoke({"verify", "--system", sys, "--series", series});
  CHECK(bad.code == kExitCheckFailed);
  const Json j = Json::parse(bad.out);
  CHECK(j["pass"] == false);
  bool witness = false;
  for (const auto& g : j["annihilation"]["generators"])
    if (!g["witness"].is_null()) witness = true;
  CHECK(witness);

  // Variable counts that differ are an input error.
  REQUIRE(invoke({"period", "--variety", "p:3", "--order", "1", "--out", series}).code == kExitOk);
  CHECK(invoke({"verify", "--system", sys, "--series", series}).code == kExitUsage);
  std::ofstream(series) << "{ not json";
  CHECK(invoke({"verify", "--system", sys, "--series", series}).code == kExitUsage);
}

TEST_CASE("output is byte-identical across thread counts and reruns") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"period", "--variety", "g:2,4", "--order", "3"},
        std::vector<std::string>{"period", "--variety", "p:5", "--ci", "2,4", "--order", "2"},
        std::vector<std::string>{"build", "--variety", "g:2,4"}}) {
    auto with = [&](const std::string& t) {
      auto a = args;
      a.insert(a.end(), {"--threads", t});
      return invoke(a);
    };
    const Outcome one = with("1");
    REQUIRE(one.code == kExitOk);
    CHECK(with("3").out == one.out);
    CHECK(with("1").out == one.out);
  }
}

TEST_CASE("topology subcommands") {
  const Outcome euler = invoke({"topology", "euler", "--variety", "p:4"});
  REQUIRE(euler.code == kExitOk);
  const Json e = Json::parse(euler.out);
  CHECK(e["euler"] == "-200");
  CHECK(e["oracle"] == "-200");
  const Json chi = Json::parse(invoke({"topology", "chiy", "--variety", "g:2,4"}).out);
  CHECK(chi["chi_y"] == Json::array({"0", "88", "-88", "0"}));
  CHECK(chi["palindromic"] == true);
  const Json ci = Json::parse(invoke({"topology", "euler", "--variety", "p:5", "--ci", "2,4"}).out);
  CHECK(ci["euler"] == "-176");
  const Json p = Json::parse(invoke({"topology", "poincare", "--variety", "g:2,4"}).out);
  CHECK(p["coefficients"] == Json::array({"1", "0", "1", "0", "2", "0", "1", "0", "1"}));
  CHECK(p["at_one"] == "6");
}

TEST_CASE("volform check through the command line") {
  const Outcome r = invoke({"volform", "check", "--variety", "g:2,4"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
}
