// slsim command-line entry point: `run` simulates one configuration, `sweep`
// runs a replication-averaged parameter grid, `stats` prints graph statistics.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "slsim/config_file.hpp"
#include "slsim/io.hpp"
#include "slsim/sim.hpp"
#include "slsim/sweep.hpp"

namespace fs = std::filesystem;
using namespace slsim;

namespace {

// Failures are reported with the stage that produced them: parse (inputs),
// config (validation), run (execution), write (outputs).
struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error("stage '" + stage + "': " + what) {}
};

std::string default_out_dir() {
  const char* env = std::getenv("SLSIM_OUT_DIR");
  return env && *env ? env : ".";
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw StageError("write", "cannot create output directory " + dir + ": " + ec.message());
}

LoadedGraph load_graph_checked(const std::string& source) {
  try {
    return load_graph_source(source);
  } catch (const std::exception& e) {
    throw StageError("parse", e.what());
  }
}

// Flag layer on top of an optional config file; flags win.
struct CommonFlags {
  std::string config_path;
  ConfigOverrides flags;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "key=value config file");
    auto opt = [&cmd](const char* name, auto& slot, const char* help) {
      cmd.add_option_function<typename std::decay_t<decltype(slot)>::value_type>(
          name, [&slot](const auto& v) { slot = v; }, help);
    };
    opt("--seed", flags.seed, "master rng seed");
    opt("--gamma", flags.gamma, "opinion decay factor in [0,1]");
    opt("--tc-mu", flags.tc_mu, "topic competence mean");
    opt("--tc-std", flags.tc_std, "topic competence std");
    opt("--a-mu", flags.a_mu, "base rate mean");
    opt("--a-std", flags.a_std, "base rate std");
    opt("--originator-fraction", flags.originator_fraction, "fraction of nodes seeded");
    opt("--originators", flags.originator_count, "explicit originator count (overrides fraction)");
    opt("--strategy", flags.strategy, "originator strategy: uniform-random | highest-degree");
    opt("--propagator-w", flags.propagator_w, "initial uncertain-evidence mass of propagators");
    opt("--steps", flags.steps, "simulation steps");
    opt("--npv", flags.n_pv, "# pro/valuable evidence items");
    opt("--npn", flags.n_pn, "# pro/noisy evidence items");
    opt("--ncv", flags.n_cv, "# con/valuable evidence items");
    opt("--ncn", flags.n_cn, "# con/noisy evidence items");
  }

  // defaults -> file -> flags
  SimConfig resolve(int* n_r) const {
    SimConfig cfg;
    try {
      if (!config_path.empty()) apply_overrides(cfg, n_r, parse_config_file(config_path));
      apply_overrides(cfg, n_r, flags);
      cfg.validate();
    } catch (const std::exception& e) {
      throw StageError("config", e.what());
    }
    return cfg;
  }
};

nlohmann::ordered_json graph_manifest(const LoadedGraph& lg) {
  nlohmann::ordered_json j;
  j["source"] = lg.source;
  j["n"] = lg.graph.node_count();
  j["edge_count"] = lg.graph.edge_count();
  return j;
}

int cmd_run(const std::string& graph_src, const CommonFlags& common,
            const std::string& out_dir, std::string metrics_path,
            std::string snapshot_path, const std::string& evidence_in,
            const std::string& evidence_out) {
  const LoadedGraph lg = load_graph_checked(graph_src);
  const SimConfig cfg = common.resolve(nullptr);

  RunResult result;
  std::optional<EvidenceMatrix> ev;
  try {
    if (!evidence_in.empty()) {
      std::ifstream in(evidence_in);
      if (!in) throw StageError("parse", "cannot open evidence file: " + evidence_in);
      ev = read_matrix(in);
    } else {
      Rng matrix_rng(derive_seed(cfg.seed, {streams::kMatrix}));
      ev = build_matrix(cfg.n_pv, cfg.n_pn, cfg.n_cv, cfg.n_cn, matrix_rng);
    }
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("parse", e.what());
  }
  try {
    result = run(lg.graph, cfg, *ev);
  } catch (const std::exception& e) {
    throw StageError("run", e.what());
  }

  try {
    ensure_dir(out_dir);
    if (metrics_path.empty()) metrics_path = (fs::path(out_dir) / "metrics.csv").string();
    if (snapshot_path.empty()) snapshot_path = (fs::path(out_dir) / "snapshot.csv").string();
    write_text_file(metrics_path, metrics_csv(result.metrics));
    write_text_file(snapshot_path, snapshot_csv(result.population));
    if (!evidence_out.empty()) {
      std::ofstream out(evidence_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open for writing: " + evidence_out);
      write_matrix(out, *ev);
    }

    nlohmann::ordered_json manifest;
    manifest["command"] = "run";
    manifest["graph"] = graph_manifest(lg);
    manifest["config"] = config_json(cfg);
    manifest["first_full_activation"] =
        result.population.first_full_activation
            ? nlohmann::ordered_json(*result.population.first_full_activation)
            : nlohmann::ordered_json(nullptr);
    manifest["outputs"] = {{"metrics", metrics_path}, {"snapshot", snapshot_path}};
    write_text_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("write", e.what());
  }
  return 0;
}

int cmd_sweep(const std::string& preset_name, const std::string& spec_path,
              std::string graph_src, const CommonFlags& common, int workers,
              int nr_override, bool desk_scale, const std::string& out_dir) {
  SweepSpec spec;
  try {
    if (!preset_name.empty() && !spec_path.empty())
      throw std::runtime_error("give either --preset or --spec, not both");
    if (!preset_name.empty())
      spec = preset(preset_name);
    else if (!spec_path.empty())
      spec = sweep_spec_from_overrides(parse_config_file(spec_path), SimConfig{});
    else
      throw std::runtime_error("sweep needs --preset <name> or --spec <file>");

    // Layer the config file, then the flags, over the spec's base; flags win.
    int n_r = spec.n_r;
    if (!common.config_path.empty())
      apply_overrides(spec.base, &n_r, parse_config_file(common.config_path));
    apply_overrides(spec.base, &n_r, common.flags);
    spec.n_r = n_r;
    if (desk_scale) spec.n_r = 30;
    if (nr_override > 0) spec.n_r = nr_override;
    spec.base.validate();
  } catch (const std::exception& e) {
    throw StageError("config", e.what());
  }

  if (graph_src.empty())
    graph_src = desk_scale ? "synthetic:ba,n=200,m=4,seed=1" : "synthetic:ba,n=1000,m=26,seed=1";
  const LoadedGraph lg = load_graph_checked(graph_src);

  SweepResult result;
  try {
    result = run_sweep(spec, lg.graph, workers);
  } catch (const std::exception& e) {
    throw StageError("run", e.what());
  }

  try {
    ensure_dir(out_dir);
    const std::string csv_path = (fs::path(out_dir) / "sweep.csv").string();
    write_text_file(csv_path, sweep_csv(result));

    nlohmann::ordered_json manifest;
    manifest["command"] = "sweep";
    if (!preset_name.empty()) manifest["preset"] = preset_name;
    if (!spec_path.empty()) manifest["spec_file"] = spec_path;
    manifest["graph"] = graph_manifest(lg);
    manifest["base_config"] = config_json(spec.base);
    manifest["axis1"] = {{"name", spec.axis1.name}, {"values", spec.axis1.values}};
    manifest["axis2"] = {{"name", spec.axis2.name}, {"values", spec.axis2.values}};
    manifest["n_r"] = spec.n_r;
    manifest["master_seed"] = spec.base.seed;
    manifest["outputs"] = {{"sweep", csv_path}};
    write_text_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("write", e.what());
  }
  return 0;
}

int cmd_stats(const std::string& graph_src) {
  const LoadedGraph lg = load_graph_checked(graph_src);
  GraphStats stats;
  try {
    stats = compute_stats(lg.graph);
  } catch (const std::exception& e) {
    throw StageError("run", e.what());
  }
  std::cout << stats_json(stats).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertain-opinion propagation simulator"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "simulate one configuration");
  std::string run_graph, run_out_dir = default_out_dir();
  std::string run_metrics, run_snapshot, run_evidence_in, run_evidence_out;
  CommonFlags run_flags;
  run_cmd->add_option("--graph", run_graph, "edge-list file or synthetic:<model>,<k=v>,...")
      ->required();
  run_flags.add_to(*run_cmd);
  run_cmd->add_option("--out-dir", run_out_dir, "output directory");
  run_cmd->add_option("--metrics-out", run_metrics, "step-metrics CSV path");
  run_cmd->add_option("--snapshot-out", run_snapshot, "final-snapshot CSV path");
  run_cmd->add_option("--evidence-in", run_evidence_in, "load the evidence matrix from a file");
  run_cmd->add_option("--evidence-out", run_evidence_out, "write the evidence matrix used");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a two-axis parameter sweep");
  std::string sweep_preset, sweep_spec_path, sweep_graph, sweep_out_dir = default_out_dir();
  int sweep_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int sweep_nr = 0;
  bool desk_scale = false;
  CommonFlags sweep_flags;
  sweep_cmd->add_option("--preset", sweep_preset,
                        "valuable-sweep | noisy-sweep | tc-under-pv | tc-under-cv");
  sweep_cmd->add_option("--spec", sweep_spec_path, "sweep spec file (key=value with axes)");
  sweep_cmd->add_option("--graph", sweep_graph,
                        "edge-list file or synthetic spec (default depends on scale)");
  sweep_flags.add_to(*sweep_cmd);
  sweep_cmd->add_option("--parallel", sweep_workers, "worker thread count");
  sweep_cmd->add_option("--nr", sweep_nr, "replications per cell");
  sweep_cmd->add_flag("--desk-scale", desk_scale, "n_r=30 and a 200-node default graph");
  sweep_cmd->add_option("--out-dir", sweep_out_dir, "output directory");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "print graph statistics as JSON");
  std::string stats_graph;
  stats_cmd->add_option("--graph", stats_graph, "edge-list file or synthetic spec")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(run_graph, run_flags, run_out_dir, run_metrics, run_snapshot,
                     run_evidence_in, run_evidence_out);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_preset, sweep_spec_path, sweep_graph, sweep_flags,
                       sweep_workers, sweep_nr, desk_scale, sweep_out_dir);
    if (stats_cmd->parsed()) return cmd_stats(stats_graph);
  } catch (const std::exception& e) {
    std::cerr << "slsim: error at " << e.what() << "\n";
    return 1;
  }
  return 0;
}
