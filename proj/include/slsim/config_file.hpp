#pragma once
// Plain-text key=value configuration. All keys are optional and mirror
// SimConfig plus the sweep knobs; unknown keys are an error so typos fail
// loudly. Precedence is command line > config file > built-in default.

#include <iosfwd>
#include <optional>
#include <string>

#include "slsim/sim.hpp"
#include "slsim/sweep.hpp"

namespace slsim {

// Values a config file (or the flag layer) may provide.
struct ConfigOverrides {
  std::optional<double> gamma, tc_mu, tc_std, a_mu, a_std;
  std::optional<double> originator_fraction, propagator_w;
  std::optional<int> originator_count, steps;
  std::optional<long long> n_pv, n_pn, n_cv, n_cn;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> strategy;  // uniform-random | highest-degree
  std::optional<int> n_r;
  // Sweep axes (spec files only).
  std::optional<std::string> axis1, axis2;
  std::optional<std::vector<double>> axis1_values, axis2_values;
};

// Lines are `key = value`; blank lines and `#` comments are ignored.
// Unknown keys raise an error carrying the line number.
ConfigOverrides parse_config(std::istream& in);
ConfigOverrides parse_config_file(const std::string& path);

SeedStrategy parse_strategy(const std::string& name);

// Applies the SimConfig-shaped subset (everything but the axes). n_r may be
// null when the caller has no sweep context.
void apply_overrides(SimConfig& cfg, int* n_r, const ConfigOverrides& o);

// Builds a sweep spec from a parsed file: axes are required, the rest
// overrides the base config.
SweepSpec sweep_spec_from_overrides(const ConfigOverrides& o, const SimConfig& base);

}  // namespace slsim
