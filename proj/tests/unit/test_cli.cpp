#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "darboux/circle.hpp"
#include "darboux/cli.hpp"
#include "darboux/curve_io.hpp"

using namespace darboux;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json result() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "darboux_cli_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate") {
  TempDir dir;
  const Run printed = run({"generate", "circle", "-M", "12"});
  REQUIRE(printed.code == cli::kOk);
  const CurveDocument doc = document_from_json(printed.result());
  REQUIRE(doc.weights.size() == 12);
  for (double w : doc.weights) CHECK(w == doctest::Approx(3.7320508075688772935).epsilon(1e-14));

  const std::string knot = dir / "knot.json";
  REQUIRE(run({"generate", "torus-knot", "-p", "2", "-q", "3", "-M", "60", "-o", knot}).code == cli::kOk);
  CHECK(load_curve_file(knot).vertex_count() == 60);
  const Run again = run({"generate", "from-file", "-i", knot});
  CHECK(again.code == cli::kOk);

  const std::string bad = dir / "bad.json";
  std::ofstream(bad) << R"({"closed": true, "vertices": [[0,1,0,0]], "weights": [1]})";
  CHECK(run({"generate", "from-file", "-i", bad}).code == cli::kIo);
  std::ofstream(dir / "junk.json") << "{not json";
  CHECK(run({"transform", "-c", dir / "junk.json", "--mu", "0.1", "--xhat", "0,0,0,0"}).code == cli::kIo);
  CHECK(run({"transform", "-c", dir / "missing.json", "--mu", "0.1", "--xhat", "0,0,0,0"}).code == cli::kIo);
}

TEST_CASE("transform and monodromy") {
  TempDir dir;
  const std::string circle = dir / "c12.json";
  REQUIRE(run({"generate", "circle", "-M", "12", "-o", circle}).code == cli::kOk);

  const Run closed = run({"transform", "-c", circle, "--mu", num(circle_resonance_mu(12, 3, 1)), "--xhat",
                          "0,0.3,1.7,-0.4", "-o", dir / "t.json"});
  REQUIRE(closed.code == cli::kOk);
  CHECK(closed.result()["closed"] == true);
  CHECK(closed.result()["closure_error"].get<double>() < 1e-8);
  CHECK(load_curve_file(dir / "t.json").vertex_count() == 12);

  // A weight equal to mu makes every edge degenerate; edge 0 is reported.
  const Run degenerate = run({"transform", "-c", circle, "--mu", "3.7320508075688772935", "--xhat", "0,1,0,0"});
  CHECK(degenerate.code == cli::kNumerical);
  CHECK(degenerate.err.find("edge 0") != std::string::npos);

  const Run zero = run({"transform", "-c", circle, "--mu", "0", "--xhat", "0,1,0,0"});
  REQUIRE(zero.code == cli::kOk);
  CHECK(zero.result().contains("note"));

  const Run mono = run({"monodromy", "-c", circle, "--mu", "0"});
  REQUIRE(mono.code == cli::kOk);
  const json mono_result = mono.result();
  for (const auto& h : mono_result["multipliers"]) {
    CHECK(h[0].get<double>() == 1.0);
    CHECK(h[1].get<double>() == 0.0);
  }

  const Run res = run({"resonances", "-c", circle, "--lo", "-5", "--hi", "0.2"});
  REQUIRE(res.code == cli::kOk);
  bool found = false;
  const json res_result = res.result();
  for (const auto& mu : res_result["resonances"]) found |= std::abs(mu.get<double>() + 3.2320508075688772935) < 1e-8;
  CHECK(found);

  const Run cl = run({"closed", "-c", circle, "--mu", "-1", "--sweep", "5", "--seed", "7"});
  REQUIRE(cl.code == cli::kOk);
  CHECK(cl.result()["transforms"].size() == 2);
  CHECK(cl.result()["sweep"]["closure_errors"].size() == 5);
}

TEST_CASE("circleton, bicycle, render and smooth") {
  TempDir dir;
  const Run ct = run({"circleton", "-M", "36", "-k", "1", "-l", "2", "-o", dir / "ct.json", "--base-output",
                      dir / "base.json"});
  REQUIRE(ct.code == cli::kOk);
  CHECK(ct.result()["vertices"] == 72);
  CHECK(ct.result()["closed"] == true);

  const Run bi = run({"bicycle", "-c", dir / "base.json", "--mu", "0.3", "--direction", "0,1,0,0"});
  REQUIRE(bi.code == cli::kOk);
  CHECK(bi.result()["max_length_deviation"].get<double>() < 1e-10);

  REQUIRE(run({"render", dir / "base.json", dir / "ct.json", "-o", dir / "a.svg"}).code == cli::kOk);
  CHECK(std::filesystem::file_size(dir / "a.svg") > 100);
  REQUIRE(run({"render", dir / "base.json", "--projection", "drop-x", "-o", dir / "b.svg"}).code == cli::kOk);
  CHECK(run({"render", dir / "base.json", "--projection", "qq", "-o", dir / "c.svg"}).code == cli::kUsage);

  const Run sm = run({"smooth", "--kind", "circle", "--mu", "-2", "--xhat", "0,0.3,1.7,-0.4", "--steps", "400", "-o",
                      dir / "s.csv"});
  REQUIRE(sm.code == cli::kOk);
  CHECK(sm.result()["samples"] == 401);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"circleton", "-M", "36", "-k", "2", "-l", "1"}).code == cli::kUsage);
  CHECK(run({"closed", "-c", "x.json", "--mu", "0", "--sweep", "3"}).code == cli::kUsage);
  CHECK(run({"transform", "-c", "x.json", "--mu", "0", "--xhat", "1,2,3"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}
