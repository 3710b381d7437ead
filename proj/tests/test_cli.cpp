#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "snarklab/gadgets.hpp"
#include "snarklab/io.hpp"

using namespace snarklab;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
};

fs::path scratch() {
  fs::path p = fs::path(::testing::TempDir()) / "snarklab_cli";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

CliRun run(const std::string& args) {
  fs::path out = scratch() / "stdout.txt";
  std::string cmd = std::string(SNARKLAB_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

nlohmann::json run_json(const std::string& args, int want_code = 0) {
  CliRun r = run(args);
  EXPECT_EQ(r.code, want_code) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify nonsense").code, 2);
  EXPECT_EQ(run("measure --sgf a --graph6 b").code, 2);
  EXPECT_EQ(run("measure").code, 2);
  EXPECT_EQ(run("--version").code, 0);
}

TEST(Cli, BuildToStdout) {
  EXPECT_EQ(run("build x").out, emit_sgf(gadget_x()));
  EXPECT_EQ(run("build y").out, emit_sgf(gadget_y()));
  EXPECT_EQ(run("build petersen --format graph6").out, "IheA@GUAo\n");
  EXPECT_EQ(run("build catalog --g 4 --format graph6").out, "EFz_\n");
  EXPECT_EQ(run("build catalog --g 5").code, 2);
}

TEST(Cli, BuildTheoremToFile) {
  fs::path out = scratch() / "t34.sgf";
  fs::remove(out);
  CliRun r = run("build theorem --r 3 --omega 4 --out " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("92 vertices"), std::string::npos);
  SemiGraph g = parse_sgf(slurp(out));
  EXPECT_EQ(g.order(), 92);
  EXPECT_TRUE(g.is_cubic());
  EXPECT_EQ(run("build theorem --r 2 --omega 4").code, 2);
  EXPECT_EQ(run("build theorem --r 3 --omega 4 --g 6").code, 2);
}

TEST(Cli, BuildComposeSeededIsDeterministic) {
  std::string args = "build compose --a 1 --b 0 --chains 1,1 --seed 9";
  CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_sgf(a.out).order(), 34 + 16 + 18);
  EXPECT_EQ(run("build compose --a 1 --b 0 --chains 1").code, 2);
}

TEST(Cli, BuildMGadgetAndCustomZ) {
  fs::path heawood = scratch() / "heawood.g6";
  put(heawood, emit_graph6(catalog_bipartite_cubic(6)) + "\n");
  CliRun m = run("build m-gadget --graph6 " + heawood.string() + " --path 0,1,2");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(parse_sgf(m.out).num_semi_edges(), 5);
  EXPECT_EQ(run("build m-gadget --graph6 " + heawood.string() + " --path 0,2,4").code, 2);

  // A colourable candidate is rejected by the Z contract.
  SemiGraph mg = parse_sgf(m.out);
  SemiGraphBuilder b(mg);
  b.clear_ports();
  auto sv = mg.semi_vertices();
  for (int i = 0; i < 5; ++i) b.set_port(z_port_names()[i], sv[i]);
  fs::path zbad = scratch() / "zbad.sgf";
  put(zbad, emit_sgf(b.build()));
  EXPECT_EQ(run("build theorem --r 3 --omega 4 --z " + zbad.string()).code, 2);

  fs::path zgood = scratch() / "zgood.sgf";
  put(zgood, emit_sgf(z_default().gadget));
  EXPECT_EQ(parse_sgf(run("build theorem --r 3 --omega 4 --z " + zgood.string()).out).order(), 92);
}

TEST(Cli, MeasurePetersen) {
  fs::path in = scratch() / "petersen.g6";
  put(in, "IheA@GUAo\n");
  nlohmann::json j = run_json("measure --graph6 " + in.string());
  EXPECT_EQ(j["measures"]["r"]["value"], 2);
  EXPECT_EQ(j["measures"]["r_v"]["value"], 2);
  EXPECT_EQ(j["measures"]["omega"]["value"], 2);
  EXPECT_EQ(j["measures"]["mu3"]["value"], 3);
  EXPECT_EQ(j["measures"]["colourable"]["value"], false);
  EXPECT_EQ(j["invariants"]["girth"], 5);
  EXPECT_EQ(j["certificates"]["status"], "pass");
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_TRUE(run_json("measure --timing --graph6 " + in.string()).contains("seconds"));
}

TEST(Cli, MeasureIsByteIdentical) {
  fs::path in = scratch() / "y.sgf";
  put(in, emit_sgf(gadget_y()));
  CliRun a = run("measure --sgf " + in.string() + " --budget-nodes 500000");
  CliRun b = run("measure --sgf " + in.string() + " --budget-nodes 500000 --jobs 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MeasureBudgetAndRequireExact) {
  fs::path in = scratch() / "petersen.sgf";
  put(in, emit_sgf(petersen()));
  CliRun loose = run("measure --sgf " + in.string() + " --budget-nodes 5");
  EXPECT_EQ(loose.code, 0);
  EXPECT_NE(loose.out.find("\"bounded\""), std::string::npos);
  EXPECT_EQ(run("measure --sgf " + in.string() + " --budget-nodes 5 --require-exact").code, 3);
  EXPECT_EQ(run("measure --sgf " + in.string() + " --require-exact").code, 0);
}

TEST(Cli, MeasureCsvAndJsonFile) {
  fs::path in = scratch() / "k33.sgf";
  fs::path csv = scratch() / "k33.csv";
  fs::path json = scratch() / "k33.json";
  put(in, emit_sgf(k33()));
  CliRun r = run("measure --sgf " + in.string() + " --csv " + csv.string() + " --json " + json.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(csv), "measure,status,lower,upper\nr,exact,0,0\nr_v,exact,0,0\nomega,exact,0,0\nmu3,exact,0,0\n");
  EXPECT_EQ(nlohmann::json::parse(slurp(json))["invariants"]["n"], 6);
}

TEST(Cli, MeasureInputErrors) {
  EXPECT_EQ(run("measure --sgf /nonexistent/file.sgf").code, 2);
  fs::path bad = scratch() / "bad.sgf";
  put(bad, "n 2\ne 0 0\n");
  EXPECT_EQ(run("measure --sgf " + bad.string()).code, 2);
  fs::path crlf = scratch() / "crlf.sgf";
  put(crlf, "n 2\r\ne 0 1\r\n");
  EXPECT_EQ(run("measure --sgf " + crlf.string()).code, 2);
}

TEST(Cli, ConvertRoundTrip) {
  fs::path sgf = scratch() / "p.sgf";
  fs::path g6 = scratch() / "p.g6";
  put(sgf, emit_sgf(petersen()));
  EXPECT_EQ(run("convert --sgf " + sgf.string()).out, "IheA@GUAo\n");
  EXPECT_EQ(run("convert --sgf " + sgf.string() + " --out " + g6.string()).code, 0);
  EXPECT_EQ(slurp(g6), "IheA@GUAo\n");
  EXPECT_EQ(run("convert --graph6 " + g6.string()).out, emit_sgf(petersen()));
  fs::path xs = scratch() / "x.sgf";
  put(xs, emit_sgf(gadget_x()));
  EXPECT_EQ(run("convert --sgf " + xs.string()).code, 2);
}

TEST(Cli, VerifySuites) {
  nlohmann::json lx = run_json("verify lemma-x");
  EXPECT_EQ(lx["claim"], "lemma-x");
  EXPECT_EQ(lx["status"], "pass");
  nlohmann::json ry = run_json("verify remark-y", 1);
  EXPECT_EQ(ry["status"], "fail");
  EXPECT_EQ(run_json("verify cores --samples 50 --seed 4")["status"], "pass");
  EXPECT_EQ(run_json("verify remark-x")["status"], "pass");
}

TEST(Cli, VerifyTheoremBounded) {
  nlohmann::json t = run_json("verify theorem --r 3 --omega 4 --budget-nodes 20000");
  EXPECT_EQ(t["status"], "bounded");
  EXPECT_EQ(run("verify theorem --r 3 --omega 4 --budget-nodes 20000 --require-exact").code, 3);
  EXPECT_EQ(run("verify theorem --r 3 --omega 5").code, 2);
}
