// snarklab: build gadgets and composed snarks, measure r / r_v / oddness /
// defect, and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snarklab.hpp"

namespace {

using namespace snarklab;

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kBounded = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Input {
  std::string sgf, graph6;

  void add(CLI::App* app) {
    auto* a = app->add_option("--sgf", sgf, "input semi-graph (.sgf)");
    auto* b = app->add_option("--graph6", graph6, "input graph in graph6 ('-' for stdin)");
    a->excludes(b);
  }
  bool given() const { return !sgf.empty() || !graph6.empty(); }
  SemiGraph load() const {
    if (!sgf.empty()) return parse_sgf(read_all(sgf));
    if (!graph6.empty()) return parse_graph6(read_all(graph6));
    throw CLI::ValidationError("input", "one of --sgf or --graph6 is required");
  }
  Json describe() const {
    Json j;
    j["format"] = sgf.empty() ? "graph6" : "sgf";
    j["source"] = sgf.empty() ? graph6 : sgf;
    return j;
  }
};

struct Common {
  std::uint64_t budget_nodes = 20'000'000;
  double budget_secs = 0.0;
  int jobs = 1;
  bool require_exact = false;
  bool timing = false;
  std::string json_out = "-";

  void add(CLI::App* app) {
    app->add_option("--budget-nodes", budget_nodes, "search node budget (0 = unlimited)")->capture_default_str();
    app->add_option("--budget-secs", budget_secs, "wall-clock budget in seconds (0 = none)");
    app->add_option("--jobs", jobs, "worker threads (default: $SNARKLAB_JOBS or 1)")->check(CLI::PositiveNumber);
    app->add_flag("--require-exact", require_exact, "exit 3 when any result is only bounded");
    app->add_flag("--timing", timing, "include wall-clock fields in JSON");
    app->add_option("--json", json_out, "JSON report destination ('-' for stdout)")->capture_default_str();
  }
  Budget budget() const { return {budget_nodes, budget_secs}; }
};

std::string sgf_or_graph6(const SemiGraph& g, const std::string& path, const std::string& format) {
  bool g6 = format == "graph6" || (format.empty() && (ends_with(path, ".g6") || ends_with(path, ".graph6")));
  return g6 ? emit_graph6(g) + "\n" : emit_sgf(g);
}

ZContract load_z(const std::string& path, int g) {
  ZContract z{g, parse_sgf(read_all(path))};
  auto v = validate_z(z, g);
  if (!v.passed()) {
    std::string why;
    for (const auto& c : v.clauses)
      if (!c.passed) why += " " + c.id + " (" + c.detail + ");";
    throw PreconditionError("Z-gadget fails its contract:" + why);
  }
  return z;
}

int finish_claims(const std::vector<ClaimReport>& reports, const Common& common) {
  Json out;
  if (reports.size() == 1) {
    out = reports.front().to_json(common.timing);
  } else {
    out["claims"] = Json::array();
    for (const auto& r : reports) out["claims"].push_back(r.to_json(common.timing));
  }
  bool failed = false, bounded = false;
  for (const auto& r : reports) {
    failed = failed || r.status() == ClaimStatus::fail;
    bounded = bounded || r.status() == ClaimStatus::bounded;
    std::cerr << r.claim << ": " << to_string(r.status()) << "\n";
  }
  write_all(common.json_out, out.dump(2) + "\n");
  if (failed) return kClaimFailed;
  if (bounded && common.require_exact) return kBounded;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snarklab: resistance, oddness and colouring defect of cubic graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "snarklab 1.0.0");

  int default_jobs = 1;
  if (const char* env = std::getenv("SNARKLAB_JOBS")) {
    try {
      default_jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed SNARKLAB_JOBS\n";
    }
  }

  // build
  auto* build = app.add_subcommand("build", "construct a gadget or graph");
  build->require_subcommand(1);
  std::string out_path, format;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "destination file (default stdout)");
    sub->add_option("--format", format, "sgf or graph6 (default from extension, else sgf)")
        ->check(CLI::IsMember({"sgf", "graph6"}));
  };
  auto* b_x = build->add_subcommand("x", "Petersen graph minus two adjacent vertices");
  auto* b_y = build->add_subcommand("y", "two X gadgets and a junction vertex");
  auto* b_p = build->add_subcommand("petersen", "the Petersen graph");
  auto* b_cat = build->add_subcommand("catalog", "bipartite cubic graph of girth 4, 6 or 8");
  int cat_girth = 6;
  b_cat->add_option("--g", cat_girth, "girth")->required();
  auto* b_m = build->add_subcommand("m-gadget", "remove a 2-path from a cubic graph");
  Input m_in;
  m_in.add(b_m);
  std::vector<int> m_path;
  b_m->add_option("--path", m_path, "u,v,w")->delimiter(',')->expected(3)->required();
  auto* b_c = build->add_subcommand("compose", "the composed graph for explicit counts");
  CompositionPlan cplan;
  std::string z_path;
  int z_girth = 5;
  std::uint64_t seed = 0;
  b_c->add_option("--a", cplan.a, "number of Y gadgets")->required();
  b_c->add_option("--b", cplan.b, "top chain length")->required();
  b_c->add_option("--chains", cplan.chains, "bottom chain lengths b0,...,ba")->delimiter(',')->required();
  b_c->add_option("--seed", seed, "randomise strand pairing");
  auto* b_t = build->add_subcommand("theorem", "the composed graph for target r and oddness");
  int t_r = 3, t_omega = 4, t_g = 5;
  b_t->add_option("--r", t_r, "resistance")->required();
  b_t->add_option("--omega", t_omega, "oddness")->required();
  b_t->add_option("--g", t_g, "girth parameter")->capture_default_str();
  for (auto* sub : {b_c, b_t}) {
    sub->add_option("--z", z_path, "Z-gadget (.sgf with ports top1 top2 mid bot1 bot2)");
    sub->add_option("--z-girth", z_girth, "girth parameter of --z")->capture_default_str();
  }
  for (auto* sub : {b_x, b_y, b_p, b_cat, b_m, b_c, b_t}) add_output(sub);

  // measure
  auto* measure = app.add_subcommand("measure", "invariants, r, r_v, oddness and defect with certificates");
  Input meas_in;
  meas_in.add(measure);
  Common meas_common;
  meas_common.jobs = default_jobs;
  meas_common.add(measure);
  std::string csv_path;
  measure->add_option("--csv", csv_path, "also write measure,status,lower,upper rows");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "lemma-x | remark-x | remark-y | cores | bounds | theorem | all")
      ->required()
      ->check(CLI::IsMember({"lemma-x", "remark-x", "remark-y", "cores", "bounds", "theorem", "all"}));
  Common ver_common;
  ver_common.jobs = default_jobs;
  ver_common.add(verify);
  int v_r = 3, v_omega = 4, v_g = 5;
  std::uint64_t v_seed = 1;
  int v_samples = 1000;
  verify->add_option("--r", v_r, "theorem: resistance")->capture_default_str();
  verify->add_option("--omega", v_omega, "theorem: oddness")->capture_default_str();
  verify->add_option("--g", v_g, "theorem: girth parameter")->capture_default_str();
  verify->add_option("--z", z_path, "theorem: Z-gadget (.sgf)");
  verify->add_option("--seed", v_seed, "cores: RNG seed")->capture_default_str();
  verify->add_option("--samples", v_samples, "cores: random triples")->capture_default_str();

  // convert
  auto* convert = app.add_subcommand("convert", "sgf <-> graph6");
  Input conv_in;
  conv_in.add(convert);
  add_output(convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      SemiGraph g;
      std::string summary;
      if (*b_x) {
        g = gadget_x();
      } else if (*b_y) {
        g = gadget_y();
      } else if (*b_p) {
        g = petersen();
      } else if (*b_cat) {
        g = catalog_bipartite_cubic(cat_girth);
      } else if (*b_m) {
        g = m_gadget(m_in.load(), {m_path[0], m_path[1], m_path[2]});
      } else {
        std::optional<ZContract> z;
        if (!z_path.empty()) z = load_z(z_path, *b_t ? t_g : z_girth);
        CompositionPlan plan;
        if (*b_t) {
          plan = theorem_plan(t_r, t_omega, t_g, z);
        } else {
          plan = cplan;
          plan.z = z ? *z : z_default();
          if (b_c->count("--seed")) plan.seed = seed;
        }
        g = compose(plan).graph;
        std::ostringstream s;
        s << "a=" << plan.a << " b=" << plan.b << " chains=";
        for (std::size_t i = 0; i < plan.chains.size(); ++i) s << (i ? "," : "") << plan.chains[i];
        summary = s.str();
      }
      write_all(out_path, sgf_or_graph6(g, out_path, format));
      if (!out_path.empty() && out_path != "-") {
        std::cout << "wrote " << out_path << ": " << g.order() << " vertices, " << g.num_edges() << " edges, "
                  << g.num_semi_edges() << " semi-edges";
        if (!summary.empty()) std::cout << " (" << summary << ")";
        std::cout << "\n";
      }
      return kOk;
    }

    if (*measure) {
      SemiGraph g = meas_in.load();
      MeasureOptions opt{meas_common.budget(), meas_common.jobs, meas_common.timing};
      MeasureReport rep = measure_report(g, meas_in.describe(), opt);
      write_all(meas_common.json_out, rep.json.dump(2) + "\n");
      if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "measure,status,lower,upper\n";
        for (const char* key : {"r", "r_v", "omega", "mu3"}) {
          const Json& m = rep.json["measures"][key];
          if (m.is_null()) continue;
          bool exact = m["status"] == "exact";
          csv << key << "," << m["status"].get<std::string>() << "," << (exact ? m["value"] : m["lower"]) << ","
              << (exact ? m["value"] : m["upper"]) << "\n";
        }
        write_all(csv_path, csv.str());
      }
      if (rep.json["certificates"]["status"] == "fail") return kClaimFailed;
      if (meas_common.require_exact && !rep.all_exact()) return kBounded;
      return kOk;
    }

    if (*verify) {
      std::vector<ClaimReport> reports;
      Budget budget = ver_common.budget();
      bool all = suite == "all";
      if (all || suite == "lemma-x") reports.push_back(verify_lemma_x());
      if (all || suite == "remark-x") reports.push_back(verify_remark_x(remark_x_hosts()));
      if (all || suite == "remark-y") reports.push_back(verify_remark_y());
      if (all || suite == "cores") reports.push_back(verify_cores(v_seed, v_samples));
      if (all || suite == "bounds") {
        std::vector<MeasuredGraph> ms;
        for (const auto& [name, g] : battery_catalog()) ms.push_back(measure_exact(name, g, budget));
        reports.push_back(verify_bounds(ms));
      }
      if (all || suite == "theorem") {
        std::optional<ZContract> z;
        if (!z_path.empty()) z = load_z(z_path, v_g);
        reports.push_back(theorem_report(v_r, v_omega, v_g, budget, z, ver_common.jobs));
      }
      return finish_claims(reports, ver_common);
    }

    if (*convert) {
      SemiGraph g = conv_in.load();
      // Without an explicit format or telling extension, convert to the other one.
      std::string fmt = format;
      bool known = ends_with(out_path, ".g6") || ends_with(out_path, ".graph6") || ends_with(out_path, ".sgf");
      if (fmt.empty() && !known) fmt = conv_in.sgf.empty() ? "sgf" : "graph6";
      write_all(out_path, sgf_or_graph6(g, out_path, fmt));
      return kOk;
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "claim violated: " << e.what() << "\n";
    return kClaimFailed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
