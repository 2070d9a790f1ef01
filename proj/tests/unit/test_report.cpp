#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "generators.hpp"
#include "report.hpp"

using namespace sgec;
using namespace sgec::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / ("sgec_report_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

RunConfig karate_config(std::vector<std::string> measures) {
  RunConfig cfg;
  cfg.graph = "karate";
  cfg.measures = std::move(measures);
  return cfg;
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(SGEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_measure") {
  CHECK(parse_measure("ec", "").kind == MeasureKind::ec);
  CHECK(parse_measure("bc", "").kind == MeasureKind::bc);
  auto p2 = parse_measure("p2c", "");
  CHECK(p2.kind == MeasureKind::f);
  CHECK(p2.pattern->name() == "p2");
  auto mixed = parse_measure("k2k3c", "");
  CHECK(mixed.kind == MeasureKind::mixed);
  CHECK(mixed.pattern->order() == 3);
  CHECK(parse_measure("f", "k3").pattern->name() == "k3");
  CHECK(parse_measure("k2f:p3", "").pattern->order() == 4);
  CHECK_THROWS_AS(parse_measure("f", ""), Error);
  CHECK_THROWS_AS(parse_measure("zz", ""), Error);
}

TEST_CASE("RunConfig validation") {
  RunConfig cfg = karate_config({"ec"});
  CHECK_NOTHROW(cfg.validate());
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  RunConfig none;
  CHECK_THROWS_AS(none.validate(), Error);
}

TEST_CASE("compute report on karate") {
  ReportDocument doc = cmd_compute(karate_config({"ec", "p2c", "k2k3c", "bc", "sc"}));
  CHECK(doc.n == 34);
  CHECK(doc.m == 78);
  CHECK(doc.indexing == Indexing::one_based);
  REQUIRE(doc.measures.size() == 5);
  REQUIRE(doc.correlations.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(*doc.correlations[i][i] == doctest::Approx(1.0));

  Json j = to_json(doc);
  CHECK(j["graph"]["n"] == 34);
  CHECK(j["graph"]["index_base"] == 1);
  CHECK(j["measures"][0]["name"] == "ec");
  CHECK(j["measures"][0]["ranking"][0] == 34);
  CHECK(j["measures"][0]["scores"].size() == 34);
  CHECK(j["measures"][3]["rho"].is_null());
  CHECK(j["measures"][2]["pattern"] == "k3");
  CHECK(j["correlations"]["method"] == "spearman");
  CHECK(j["correlations"]["matrix"].size() == 5);

  // Rankings are permutations of the vertex ids.
  for (const auto& m : j["measures"]) {
    std::vector<int> ids = m["ranking"].get<std::vector<int>>();
    std::sort(ids.begin(), ids.end());
    for (int i = 0; i < 34; ++i) CHECK(ids[i] == i + 1);
  }
}

TEST_CASE("JSON output is byte-identical across runs") {
  auto once = [] {
    std::ostringstream os;
    write_report(os, cmd_compute(karate_config({"ec", "p2c", "k2k3c", "bc", "sc"})),
                 OutputFormat::json);
    return os.str();
  };
  CHECK(once() == once());
}

TEST_CASE("CSV has a header and one row per vertex") {
  std::ostringstream os;
  write_csv(os, cmd_compute(karate_config({"ec", "dc"})));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "vertex,ec,dc");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 34);
}

TEST_CASE("table output mentions each measure") {
  std::ostringstream os;
  write_table(os, cmd_compute(karate_config({"ec", "bc"})));
  CHECK(os.str().find("ec") != std::string::npos);
  CHECK(os.str().find("bc") != std::string::npos);
  CHECK(os.str().find("n=34") != std::string::npos);
}

TEST_CASE("convergence trace") {
  fs::path dir = scratch_dir();
  RunConfig cfg = karate_config({"ec"});
  cfg.trace_path = (dir / "trace.csv").string();
  ReportDocument doc = cmd_compute(cfg);
  std::istringstream in(slurp(cfg.trace_path));
  std::string line;
  std::getline(in, line);
  CHECK(line == "measure,iteration,lower,upper");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == doc.measures[0].centrality.iterations);
}

TEST_CASE("check reports existence diagnostics") {
  RunConfig cfg = karate_config({});
  cfg.pattern = "k3";
  Json j = cmd_check(cfg);
  CHECK(j["connected"] == true);
  CHECK(j["occurrences"]["total"] == 45);
  CHECK(j["tensor"]["weakly_irreducible"] == false);
  CHECK(j["mixed_tensor"]["weakly_irreducible"] == true);

  cfg.pattern = "k2";
  CHECK(cmd_check(cfg)["mixed_tensor"].is_null());

  fs::path dir = scratch_dir();
  cfg.pattern = "p2";
  cfg.dump_tensor_path = (dir / "tensor.txt").string();
  Json p2 = cmd_check(cfg);
  std::istringstream in(slurp(cfg.dump_tensor_path));
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == p2["occurrences"]["sets"].get<std::size_t>());
  CHECK(lines > 0);
}

TEST_CASE("errors map to exit codes") {
  RunConfig missing;
  missing.graph = "/nonexistent/graph.txt";
  missing.measures = {"ec"};
  try {
    cmd_compute(missing);
    FAIL("expected an io error");
  } catch (const std::exception& e) {
    CHECK(exit_code_for(e) == kExitIo);
  }

  fs::path dir = scratch_dir();
  fs::path bridged = dir / "bridged.txt";
  std::ofstream(bridged) << "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n";
  RunConfig cfg;
  cfg.graph = bridged.string();
  cfg.measures = {"k3c"};
  try {
    cmd_compute(cfg);
    FAIL("expected not_f_connected");
  } catch (const std::exception& e) {
    CHECK(exit_code_for(e) == kExitNoCentrality);
    Json doc = error_document(e);
    CHECK(doc["error"] == "not_f_connected");
    CHECK(doc["witness"]["uncovered_edges"] == Json::array({Json::array({2, 3})}));
  }

  CHECK(exit_code_for(ParseError("bad", 3)) == kExitParse);
  CHECK(exit_code_for(NotConvergedError(SpectralResult{})) == kExitNotConverged);
  CHECK(exit_code_for(Error(ErrorKind::unknown_dataset, "x")) == kExitUsage);
}

TEST_CASE("dataset materialization round-trips") {
  fs::path dir = scratch_dir();
  std::string path = cmd_dataset("karate", dir.string());
  RunConfig cfg;
  cfg.graph = path;
  cfg.one_based = true;
  Graph g = load_graph(cfg);
  CHECK(g.num_vertices() == 34);
  CHECK(g.num_edges() == 78);
  CHECK_THROWS_AS(cmd_dataset("sandi", dir.string()), Error);
}

TEST_CASE("command-line binary") {
  fs::path dir = scratch_dir();

  Run patterns = run_cli("patterns");
  CHECK(patterns.status == 0);
  CHECK(patterns.out.find("k3") != std::string::npos);

  Run a = run_cli("compute --graph karate --measure ec,p2c,k2k3c,bc,sc");
  Run b = run_cli("compute --graph karate --measure ec,p2c,k2k3c,bc,sc");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["measures"].size() == 5);

  Run csv = run_cli("compute --graph karate --measure ec --out csv");
  CHECK(csv.status == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 35);

  fs::path bridged = dir / "bridged.txt";
  std::ofstream(bridged) << "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n";
  Run nf = run_cli("compute --graph " + bridged.string() + " --measure k3c");
  CHECK(nf.status == kExitNoCentrality);
  CHECK(nf.out.find("uncovered_edges") != std::string::npos);

  fs::path bad = dir / "bad.txt";
  std::ofstream(bad) << "0 1\n1 x\n";
  CHECK(run_cli("compute --graph " + bad.string()).status == kExitParse);
  CHECK(run_cli("compute --graph karate --max-iter 1").status == kExitNotConverged);
  CHECK(run_cli("compute --graph karate --measure nope").status == kExitUsage);
  CHECK(run_cli("compute").status == kExitUsage);
  CHECK(run_cli("compute --graph /no/such/file").status == kExitIo);

  Run check = run_cli("check --graph karate --pattern p2");
  CHECK(check.status == 0);
  CHECK(Json::parse(check.out)["tensor"]["weakly_irreducible"] == true);

  Run ds = run_cli("dataset karate --dir " + dir.string());
  CHECK(ds.status == 0);
  CHECK(fs::exists(dir / "karate.edgelist"));

  fs::remove_all(dir);
}
