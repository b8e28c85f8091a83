#include <filesystem>
#include <fstream>
#include <sstream>

#include "anticoh/catalog.hpp"
#include "anticoh/io.hpp"
#include "anticoh/measures.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace anticoh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("anticoh_cli_" + name)).string();
}

}  // namespace

TEST_CASE("measure on a catalog state") {
  const Run r = run({"measure", "--name", "cat", "--j", "3/2", "--t", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2,bures,0.341081377402109,") != std::string::npos);
  CHECK(r.out.find("2,purity,0.75,") != std::string::npos);
  const Run d = run({"measure", "--name", "dicke", "--j", "2", "--m", "2", "--t", "1", "--kinds", "purity"});
  CHECK(d.out == "t,kind,value,error\n1,purity,0,\n");
}

TEST_CASE("out-of-range orders get an error marker") {
  const Run r = run({"measure", "--name", "cat", "--two-j", "3", "--t", "1,3", "--kinds", "hs"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3,hs,,t outside 1 <= t < 2j") != std::string::npos);
}

TEST_CASE("measure from a file matches the library profile") {
  const std::string path = temp_path("psi.json");
  write_text_file(path, format_state_document({catalog::psi52_counterexample(), std::nullopt, std::nullopt}));
  const Run r = run({"measure", "--file", path, "--t", "1,2,3", "--kinds", "purity,hs,trace,bures"});
  CHECK(r.code == 0);
  const MeasureProfile p = measure_profile(catalog::psi52_counterexample());
  for (int t = 1; t <= 3; ++t) {
    for (MeasureKind k : kOrderMeasureKinds) {
      const std::string row = std::to_string(t) + "," + std::string(to_string(k)) + "," +
                              format_double(p.at(t).get(k)) + ",";
      CHECK(r.out.find(row) != std::string::npos);
    }
  }
  write_text_file(path, "{broken");
  CHECK(run({"measure", "--file", path}).code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("majorana and from-points") {
  const Run cat = run({"majorana", "--name", "cat", "--j", "2", "--format", "csv"});
  CHECK(cat.code == 0);
  CHECK(std::count(cat.out.begin(), cat.out.end(), '\n') == 5);
  const Run d = run({"majorana", "--name", "dicke", "--j", "3", "--m", "0"});
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc["points"].size() == 2);
  CHECK(doc["points"][0]["multiplicity"] == 3);

  const std::string pts = temp_path("oct_points.json");
  CHECK(run({"majorana", "--name", "octahedron", "--output", pts}).code == 0);
  const Run st = run({"from-points", "--points", pts});
  CHECK(st.code == 0);
  const StateDocument sd = parse_state_document(st.out);
  CHECK(a_purity(sd.state, 3) == doctest::Approx(1.0).epsilon(1e-10));
  std::filesystem::remove(pts);
}

TEST_CASE("search command") {
  const Run ok = run({"search", "--j", "2", "--t", "2", "--g", "1", "--restarts", "8", "--require-converged"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["converged"] == true);

  const std::string cfg = temp_path("search.json");
  write_text_file(cfg, R"({"j":"5/2","t":2,"g":0,"restarts":16,"seed":3})");
  const Run hole = run({"search", "--config", cfg});
  CHECK(hole.code == 0);
  const auto doc = nlohmann::json::parse(hole.out);
  CHECK(doc["converged"] == false);
  CHECK(std::abs(doc["best_value"].get<double>() - 0.99) < 1e-6);
  CHECK(run({"search", "--config", cfg, "--require-converged"}).code == 3);
  // Same seed, same bytes.
  CHECK(run({"search", "--config", cfg}).out == hole.out);
  CHECK(run({"search", "--config", cfg, "--threads", "2"}).out == hole.out);
  std::filesystem::remove(cfg);
}

TEST_CASE("gmax command") {
  const Run r = run({"gmax", "--j-max", "3", "--t-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("two_j,t,g_max,best_value,converged\n", 0) == 0);
  CHECK(r.out.find("\n5,2,0,0.99") != std::string::npos);
  CHECK(r.out.find("\n6,3,1,1,true") != std::string::npos);
  CHECK(r.out.find("\n5,3,0,") != std::string::npos);
  CHECK(run({"gmax", "--j-max", "11"}).code == 1);
}

TEST_CASE("sweep command") {
  const Run r = run({"sweep", "--kind", "spin1-theta", "--count", "181"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n3.14159265358979,1,1,1,1,1") != std::string::npos);
  CHECK(run({"sweep", "--kind", "spin1-theta", "--output", "/nonexistent-dir/x.csv"}).code != 0);
  CHECK(run({"sweep", "--kind", "nope"}).code == 1);
  const Run p = run({"sweep", "--kind", "profile-t", "--name", "octahedron"});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("t,variance,purity,hs,trace,bures\n", 0) == 0);
}

TEST_CASE("profile and catalog commands") {
  const Run p = run({"profile", "--name", "tetrahedron"});
  CHECK(p.code == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 4);
  const Run c = run({"catalog"});
  CHECK(c.code == 0);
  CHECK(c.out.find(",false,") == std::string::npos);
  const Run n = run({"catalog", "--names"});
  CHECK(n.out.find("\ncoulomb\n") != std::string::npos);
}

TEST_CASE("usage errors and threads") {
  CHECK(run({}).code == 1);
  CHECK(run({"measure"}).code == 1);
  CHECK(run({"measure", "--name", "cat"}).code == 1);
  CHECK(run({"measure", "--name", "cat", "--j", "5/3"}).code == 1);
  CHECK(run({"search", "--j", "2", "--t", "2", "--threads", "0"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  setenv("ANTICOH_THREADS", "x", 1);
  CHECK(run({"search", "--j", "1", "--t", "1", "--restarts", "1"}).code == 1);
  setenv("ANTICOH_THREADS", "2", 1);
  CHECK(run({"search", "--j", "1", "--t", "1", "--restarts", "2"}).code == 0);
  unsetenv("ANTICOH_THREADS");
}

TEST_CASE("numerical failures exit with code 2") {
  const std::string path = temp_path("coulomb_fail.json");
  // Coulomb states need 2j <= 100; out-of-range input is a usage error.
  CHECK(run({"measure", "--name", "coulomb", "--two-j", "101"}).code == 1);
  std::filesystem::remove(path);
}
