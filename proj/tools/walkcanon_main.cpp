#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "walkcanon/experiments.hpp"
#include "walkcanon/gadget.hpp"
#include "walkcanon/graph.hpp"
#include "walkcanon/graph6.hpp"
#include "walkcanon/refine.hpp"
#include "walkcanon/walks.hpp"

// Exit codes: 0 success / positive verdict, 1 negative domain verdict
// (give-up, rows not equivalent, copies distinguished, failed verification),
// 2 usage or input errors.

namespace {

using walkcanon::Graph;

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return walkcanon::parse_graph_auto(buf.str());
}

void write_or_print(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << payload;
}

int cmd_canon(const std::string& file) {
  const Graph g = load_graph(file);
  const walkcanon::CanonLabeling canon = walkcanon::canonize_walk3(g);
  nlohmann::ordered_json doc;
  doc["schema"] = "canon/1";
  doc["outcome"] = canon.outcome == walkcanon::CanonOutcome::Discrete
                       ? "discrete"
                       : "give_up";
  auto labels = nlohmann::ordered_json::array();
  for (int x = 0; x < g.order(); ++x) {
    const auto row = canon.labels.row(x);
    labels.push_back(std::vector<std::uint64_t>(row.begin(), row.end()));
  }
  doc["labels"] = std::move(labels);
  if (canon.witness)
    doc["witness"] = {canon.witness->first, canon.witness->second};
  std::cout << doc.dump(2) << '\n';
  return canon.outcome == walkcanon::CanonOutcome::Discrete ? 0 : 1;
}

int cmd_iso(const std::string& file1, const std::string& file2,
            const std::string& method) {
  const Graph g = load_graph(file1);
  const Graph h = load_graph(file2);
  nlohmann::ordered_json doc;
  doc["schema"] = "iso/1";
  doc["method"] = method;
  bool separated;
  if (method == "wm") {
    separated = !walkcanon::wm_equivalent(g, h);
    doc["verdict"] = separated ? "not_equivalent" : "equivalent";
  } else {
    separated = walkcanon::cr_distinguishes(
        g, walkcanon::Coloring::uniform(g.order()), h,
        walkcanon::Coloring::uniform(h.order()));
    doc["verdict"] = separated ? "distinguished" : "not_distinguished";
  }
  std::cout << doc.dump(2) << '\n';
  return separated ? 1 : 0;
}

int cmd_refine(const std::string& file, int rounds) {
  const Graph g = load_graph(file);
  const walkcanon::RefinementTrace trace =
      walkcanon::refine(g, walkcanon::Coloring::uniform(g.order()));
  const walkcanon::Coloring& shown =
      rounds < 0 ? trace.stable() : trace.round(rounds);
  nlohmann::ordered_json doc;
  doc["schema"] = "coloring/1";
  doc["stable_at"] = trace.stable_at;
  if (rounds >= 0) doc["round"] = std::min(rounds, trace.stable_at);
  doc["colors"] = shown.colors;
  std::cout << doc.dump(2) << '\n';
  return 0;
}

int cmd_walks(const std::string& file, int k, bool full) {
  const Graph g = load_graph(file);
  nlohmann::ordered_json doc;
  if (full) {
    const walkcanon::WalkMatrix wm = walkcanon::walk_matrix(g);
    doc["schema"] = "walk-matrix/1";
    doc["n"] = wm.n;
    auto rows = nlohmann::ordered_json::array();
    for (int x = 0; x < wm.n; ++x) {
      auto row = nlohmann::ordered_json::array();
      for (int j = 0; j < wm.n; ++j) row.push_back(wm.at(x, j).str());
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
  } else {
    const walkcanon::WalkSignature sig = walkcanon::walk_signature(g, k);
    doc["schema"] = "walk-signature/1";
    doc["k"] = sig.k;
    auto rows = nlohmann::ordered_json::array();
    for (int x = 0; x < sig.n; ++x) {
      const auto row = sig.row(x);
      rows.push_back(std::vector<std::uint64_t>(row.begin(), row.end()));
    }
    doc["rows"] = std::move(rows);
  }
  std::cout << doc.dump(2) << '\n';
  return 0;
}

int cmd_gadget_build(bool prime) {
  const Graph g = prime ? walkcanon::build_gadget_prime()
                        : walkcanon::build_gadget().graph;
  std::cout << walkcanon::to_graph6(g) << '\n';
  return 0;
}

int cmd_gadget_verify() {
  const walkcanon::GadgetReport report = walkcanon::verify_gadget();
  std::cout << report.to_json() << '\n';
  return report.all_ok() ? 0 : 1;
}

int cmd_experiment(const walkcanon::ExperimentConfig& cfg,
                   const std::string& out) {
  const walkcanon::ExperimentReport report = walkcanon::run_experiment(cfg);
  if (out.empty()) {
    std::cout << report.to_json() << '\n';
  } else {
    write_or_print(out + ".json", report.to_json());
    write_or_print(out + ".csv", report.to_csv());
  }
  return 0;
}

int cmd_convert(const std::string& file, const std::string& to) {
  const Graph g = load_graph(file);
  if (to == "graph6")
    std::cout << walkcanon::to_graph6(g) << '\n';
  else
    std::cout << walkcanon::to_adjacency_list(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walk-count canonization, color refinement and walk-matrix "
               "experiments on simple graphs"};
  app.require_subcommand(1);

  std::string file, file2, out;
  std::string method = "wm";
  std::string to = "graph6";
  int rounds = -1;
  int k = 3;
  bool full = false;
  bool prime = false;

  auto* canon = app.add_subcommand(
      "canon", "attempt a canonical labeling from (w1,w2,w3)");
  canon->add_option("file", file, "graph file (graph6 or adjacency list)")
      ->required();

  auto* iso = app.add_subcommand("iso", "compare two graphs");
  iso->add_option("file1", file, "first graph")->required();
  iso->add_option("file2", file2, "second graph")->required();
  iso->add_option("--method", method, "wm: walk-matrix row multisets; cr: joint color refinement")
      ->check(CLI::IsMember({"wm", "cr"}));

  auto* refine = app.add_subcommand("refine", "run color refinement");
  refine->add_option("file", file, "graph file")->required();
  refine->add_option("--rounds", rounds, "report this round instead of the stable coloring");

  auto* walks = app.add_subcommand("walks", "per-vertex walk counts");
  walks->add_option("file", file, "graph file")->required();
  walks->add_option("--k", k, "signature length (default 3)");
  walks->add_flag("--full", full, "full exact walk matrix instead");

  auto* gadget = app.add_subcommand(
      "gadget", "the 36-vertex separating construction");
  auto* gbuild = gadget->add_subcommand("build", "print the gadget as graph6");
  gbuild->add_flag("--prime", prime, "build the walk-equivalent twin instead");
  auto* gverify = gadget->add_subcommand("verify", "check all gadget properties");
  gadget->require_subcommand(1);

  auto* experiment = app.add_subcommand("experiment", "random-graph sweeps");
  walkcanon::ExperimentConfig cfg;
  std::string kind = "w3";
  experiment->add_option("--n", cfg.n, "vertices per sample")->required();
  experiment->add_option("--p", cfg.p, "edge probability (default 0.5)");
  experiment->add_option("--samples", cfg.samples, "number of samples")->required();
  experiment->add_option("--seed", cfg.seed, "base seed (per-sample seeds derive from it)");
  experiment->add_option("--experiment", kind, "w3 | w2 | pairs | wmcr")
      ->check(CLI::IsMember({"w3", "w2", "pairs", "wmcr"}));
  experiment->add_option("--out", out, "write <out>.json and <out>.csv instead of stdout");
  experiment->add_option("--workers", cfg.workers, "sample-level worker threads")
      ->envname("WALKCANON_WORKERS");

  auto* convert = app.add_subcommand("convert", "re-encode a graph file");
  convert->add_option("file", file, "graph file")->required();
  convert->add_option("--to", to, "target format")
      ->check(CLI::IsMember({"graph6", "adjlist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, parse errors are usage errors
  }

  try {
    if (app.got_subcommand(canon)) return cmd_canon(file);
    if (app.got_subcommand(iso)) return cmd_iso(file, file2, method);
    if (app.got_subcommand(refine)) return cmd_refine(file, rounds);
    if (app.got_subcommand(walks)) return cmd_walks(file, k, full);
    if (app.got_subcommand(gadget)) {
      if (gadget->got_subcommand(gbuild)) return cmd_gadget_build(prime);
      if (gadget->got_subcommand(gverify)) return cmd_gadget_verify();
    }
    if (app.got_subcommand(experiment)) {
      const auto parsed = walkcanon::experiment_from_string(kind);
      cfg.experiment = *parsed;  // membership already enforced by CLI11
      return cmd_experiment(cfg, out);
    }
    if (app.got_subcommand(convert)) return cmd_convert(file, to);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
