#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sf/cli.hpp"

using namespace sf;

namespace {

Json flagship_ring_json() {
  Json r;
  r["p"] = 2;
  r["vars"] = Json::array({Json{{"name", "x"}, {"deg", 1}}, Json{{"name", "y"}, {"deg", 1}}});
  r["f"] = Json::array({"x^2", "y^2"});
  return r;
}

Json base_task(const std::string& cmd) {
  Json t;
  t["command"] = cmd;
  t["ring"] = flagship_ring_json();
  Json par;
  par["D"] = 9;
  par["w"] = 2;
  par["e"] = 2;
  t["params"] = par;
  return t;
}

CliOptions plain_opts() {
  CliOptions o;
  o.no_cache = true;
  return o;
}

}  // namespace

TEST_CASE("check-ring: valid and invalid rings") {
  CliResult ok = run_task(base_task("check-ring"), plain_opts());
  CHECK(ok.exit_code == 0);
  CHECK(ok.report["result"]["valid"] == true);
  CHECK(ok.report["result"]["dim"] == 0);

  Json bad = base_task("check-ring");
  bad["ring"]["f"] = Json::array({"x^2", "x*y"});
  CliResult res = run_task(bad, plain_opts());
  CHECK(res.exit_code == 3);
  CHECK(res.report["error"]["code"] == "NotRegularSequence");
}

TEST_CASE("schema errors exit 3") {
  Json t;
  t["command"] = "support";
  CHECK(run_task(t, plain_opts()).exit_code == 3);
  Json t2 = base_task("nonsense");
  CHECK(run_task(t2, plain_opts()).exit_code == 3);
  Json t3 = base_task("support");
  t3["module"] = "M";  // undefined module name
  CHECK(run_task(t3, plain_opts()).exit_code == 3);
}

TEST_CASE("resolve: Betti numbers of k") {
  Json t = base_task("resolve");
  CliResult res = run_task(t, plain_opts());
  REQUIRE(res.exit_code == 0);
  const Json& betti = res.report["result"]["betti"];
  REQUIRE(betti.size() == 10);
  for (size_t i = 0; i < betti.size(); ++i) CHECK(betti[i]["rank"] == i + 1);
}

TEST_CASE("support of a free module: unit ideal, empty subset of Proj") {
  Json t = base_task("support");
  Json mod;
  mod["gens"] = Json::array({Json{{"deg", 0}}});
  mod["relations"] = Json::array();
  t["modules"] = Json{{"M", mod}};
  t["module"] = "M";
  CliResult res = run_task(t, plain_opts());
  CHECK(res.exit_code == 0);
  CHECK(res.report["result"]["ideal"] == Json::array({"1"}));
  CHECK(res.report["result"]["stabilized"] == true);
  CHECK(res.report["result"]["agreement"] == true);
  CHECK(res.report["result"]["oracle_points_checked"].size() == 8);
}

TEST_CASE("support of R/(x): V(x2) with oracle agreement at 8 points") {
  Json t = base_task("support");
  Json mod;
  mod["gens"] = Json::array({Json{{"deg", 0}}});
  mod["relations"] = Json::array({Json::array({"x"})});
  t["modules"] = Json{{"M", mod}};
  t["module"] = "M";
  CliResult res = run_task(t, plain_opts());
  CHECK(res.exit_code == 0);
  CHECK(res.report["result"]["ideal"] == Json::array({"x2"}));
  CHECK(res.report["result"]["oracle_points_checked"].size() == 8);
  // rational points listed by default at this size: (1,0) over F2 and F4
  REQUIRE(res.report["result"].contains("rational_points"));
  CHECK(res.report["result"]["rational_points"].size() == 2);
}

TEST_CASE("realize task: verified verdict, exit 0, reproducible bytes") {
  Json t = base_task("realize");
  t["target"] = Json::array({"x1 + x2"});
  CliResult a = run_task(t, plain_opts());
  REQUIRE(a.exit_code == 0);
  CHECK(a.report["result"]["verdict"] == "verified");
  CHECK(a.report["result"]["clipped"] == false);
  CHECK(a.report["result"]["base_support"]["ideal"] == Json::array());  // Supp(k) is everything
  CliResult b = run_task(t, plain_opts());
  CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("realize pair mode through the CLI") {
  Json t = base_task("realize");
  t["target"] = Json::array({"x1"});
  t["module"] = "k";
  t["module_n"] = "k";
  CliResult res = run_task(t, plain_opts());
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["result"]["pair"] == true);
  CHECK(res.report["result"]["same_output"] == true);
  CHECK(res.report["result"]["verdict"] == "verified");
}

TEST_CASE("cone task emits a certificate") {
  Json t = base_task("cone");
  t["target"] = Json::array({"x1"});
  CliResult res = run_task(t, plain_opts());
  REQUIRE(res.exit_code == 0);
  const Json& cert = res.report["result"]["certificate"];
  REQUIRE(cert.size() == 2);
  CHECK(cert[0]["op"] == "cone");
  CHECK(cert[0]["phi"] == "x1");
  CHECK(cert[1]["op"] == "syzygy");
  CHECK(cert[1]["n"] == 2);
  CHECK(res.report["result"]["support"]["ideal"] == Json::array({"x1"}));
}

TEST_CASE("oracle task: single point and full sweep") {
  Json t = base_task("oracle");
  Json mod;
  mod["gens"] = Json::array({Json{{"deg", 0}}});
  mod["relations"] = Json::array({Json::array({"x"})});
  t["modules"] = Json{{"M", mod}};
  t["module"] = "M";
  Json pt;
  pt["e"] = 1;
  pt["alpha"] = Json::array({"1", "0"});
  t["point"] = pt;
  CliResult res = run_task(t, plain_opts());
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["result"]["points"][0]["infinite_pd"] == true);

  t.erase("point");
  CliResult sweep = run_task(t, plain_opts());
  CHECK(sweep.report["result"]["points"].size() == 8);
}

TEST_CASE("ext task reports dims and action matrices") {
  Json t = base_task("ext");
  CliResult res = run_task(t, plain_opts());
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["result"]["dims"][3] == 4);
  CHECK(res.report["result"]["action"].contains("x1"));
  CHECK(res.report["result"]["action"].contains("x2"));
}

TEST_CASE("cache: warm run reproduces the cold report byte for byte") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sf-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  Json t = base_task("realize");
  t["target"] = Json::array({"x1*x2"});

  FileResolutionCache cache(dir.string());
  set_resolution_cache(&cache);
  CliResult cold = run_task(t, plain_opts());
  CHECK(fs::directory_iterator(dir) != fs::directory_iterator());  // wrote entries
  CliResult warm = run_task(t, plain_opts());
  set_resolution_cache(nullptr);
  CliResult nocache = run_task(t, plain_opts());

  CHECK(cold.report.dump() == warm.report.dump());
  CHECK(cold.report.dump() == nocache.report.dump());
  fs::remove_all(dir);
}

TEST_CASE("round-trip: the report embeds the task and reruns identically") {
  Json t = base_task("support");
  CliResult first = run_task(t, plain_opts());
  REQUIRE(first.exit_code == 0);
  CliResult again = run_task(first.report["task"], plain_opts());
  CHECK(first.report.dump() == again.report.dump());
}

TEST_CASE("cli binary end-to-end with verify") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sf-cli-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  Json t = base_task("support");
  {
    std::ofstream out(dir / "task.json");
    out << t.dump(2) << "\n";
  }
  std::string bin = fs::path(CLI_BINARY_PATH).string();
  std::string base = "cd " + dir.string() + " && " + bin;
  int rc = std::system((base + " support --task task.json --out report.json --no-cache > /dev/null").c_str());
  CHECK(WEXITSTATUS(rc) == 0);
  REQUIRE(fs::exists(dir / "report.json"));
  int rv = std::system((base + " verify --report report.json --no-cache > verify.out").c_str());
  CHECK(WEXITSTATUS(rv) == 0);
  std::ifstream vin(dir / "verify.out");
  Json vr;
  vin >> vr;
  CHECK(vr["reproduced"] == true);
  fs::remove_all(dir);
}
