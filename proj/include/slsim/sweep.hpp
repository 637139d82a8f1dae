#pragma once
// Two-axis parameter sweeps with replication averaging. Every run is keyed by
// (cell index, replication index), and its seed is derived from the master
// seed and that key, so results are independent of worker count and
// scheduling.

#include <cstdint>
#include <string>
#include <vector>

#include "slsim/graph.hpp"
#include "slsim/sim.hpp"

namespace slsim {

struct AxisSpec {
  std::string name;
  std::vector<double> values;
};

struct SweepSpec {
  SimConfig base;  // base.seed is the sweep's master seed
  AxisSpec axis1;
  AxisSpec axis2;
  int n_r = 100;  // replications per cell
};

struct SweepCell {
  double axis1_value = 0.0;
  double axis2_value = 0.0;
  double mean_b = 0.0, std_b = 0.0;
  double mean_d = 0.0, std_d = 0.0;
  double mean_u = 0.0, std_u = 0.0;
  double frac_r = 0.0, std_r = 0.0;
  std::vector<std::uint64_t> seeds;  // one per replication
};

struct SweepResult {
  std::string axis1_name;
  std::string axis2_name;
  int n_r = 0;
  std::vector<SweepCell> cells;  // axis1-major order
};

// Sets one sweepable parameter by name. Valid names: n_pv, n_pn, n_cv, n_cn,
// gamma, tc_mu, tc_std, a_mu, a_std, propagator_w, steps,
// originator_fraction. Unknown names and out-of-domain values throw.
void apply_parameter(SimConfig& cfg, const std::string& name, double value);

// Grids mirroring the four sensitivity studies: valuable-sweep (#PV x #CV),
// noisy-sweep (#PN x #CN), tc-under-pv (tc x #PV), tc-under-cv (tc x #CV).
// Non-swept classes stay at 1000; the tc presets pin tc_std = 0 so each curve
// is a homogeneous-competence population.
SweepSpec preset(const std::string& name);
std::vector<std::string> preset_names();

// Runs every (cell, replication) job on `workers` threads. Aggregates the
// final-step metrics: mean and sample std of mean_b/mean_d/mean_u/frac_R.
SweepResult run_sweep(const SweepSpec& spec, const Graph& g, int workers);

}  // namespace slsim
