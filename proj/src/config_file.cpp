#include "slsim/config_file.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace slsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line) + ": bad value for '" +
                             key + "': " + v);
  }
}

long long parse_int(const std::string& key, const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line) + ": bad value for '" +
                             key + "': " + v);
  }
}

std::vector<double> parse_list(const std::string& key, const std::string& v, int line) {
  std::vector<double> out;
  std::istringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw std::runtime_error("config line " + std::to_string(line) +
                               ": empty item in list for '" + key + "'");
    out.push_back(parse_double(key, item, line));
  }
  if (out.empty())
    throw std::runtime_error("config line " + std::to_string(line) + ": empty list for '" +
                             key + "'");
  return out;
}

}  // namespace

SeedStrategy parse_strategy(const std::string& name) {
  if (name == "uniform-random") return SeedStrategy::UniformRandom;
  if (name == "highest-degree") return SeedStrategy::HighestDegree;
  throw std::runtime_error("unknown originator strategy '" + name +
                           "' (use uniform-random or highest-degree)");
}

ConfigOverrides parse_config(std::istream& in) {
  ConfigOverrides o;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key = value");

    if (key == "gamma") o.gamma = parse_double(key, val, line_no);
    else if (key == "tc_mu") o.tc_mu = parse_double(key, val, line_no);
    else if (key == "tc_std") o.tc_std = parse_double(key, val, line_no);
    else if (key == "a_mu") o.a_mu = parse_double(key, val, line_no);
    else if (key == "a_std") o.a_std = parse_double(key, val, line_no);
    else if (key == "originator_fraction") o.originator_fraction = parse_double(key, val, line_no);
    else if (key == "originator_count") o.originator_count = static_cast<int>(parse_int(key, val, line_no));
    else if (key == "originator_strategy") o.strategy = val;
    else if (key == "propagator_w") o.propagator_w = parse_double(key, val, line_no);
    else if (key == "steps") o.steps = static_cast<int>(parse_int(key, val, line_no));
    else if (key == "seed") o.seed = static_cast<std::uint64_t>(parse_int(key, val, line_no));
    else if (key == "n_pv") o.n_pv = parse_int(key, val, line_no);
    else if (key == "n_pn") o.n_pn = parse_int(key, val, line_no);
    else if (key == "n_cv") o.n_cv = parse_int(key, val, line_no);
    else if (key == "n_cn") o.n_cn = parse_int(key, val, line_no);
    else if (key == "n_r") o.n_r = static_cast<int>(parse_int(key, val, line_no));
    else if (key == "axis1") o.axis1 = val;
    else if (key == "axis2") o.axis2 = val;
    else if (key == "axis1_values") o.axis1_values = parse_list(key, val, line_no);
    else if (key == "axis2_values") o.axis2_values = parse_list(key, val, line_no);
    else
      throw std::runtime_error("config line " + std::to_string(line_no) + ": unknown key '" +
                               key + "'");
  }
  return o;
}

ConfigOverrides parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  try {
    return parse_config(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void apply_overrides(SimConfig& cfg, int* n_r, const ConfigOverrides& o) {
  if (o.gamma) cfg.gamma = *o.gamma;
  if (o.tc_mu) cfg.tc_mu = *o.tc_mu;
  if (o.tc_std) cfg.tc_std = *o.tc_std;
  if (o.a_mu) cfg.a_mu = *o.a_mu;
  if (o.a_std) cfg.a_std = *o.a_std;
  if (o.originator_fraction) cfg.originator_fraction = *o.originator_fraction;
  if (o.originator_count) cfg.originator_count = *o.originator_count;
  if (o.strategy) cfg.strategy = parse_strategy(*o.strategy);
  if (o.propagator_w) cfg.propagator_w = *o.propagator_w;
  if (o.steps) cfg.steps = *o.steps;
  if (o.seed) cfg.seed = *o.seed;
  if (o.n_pv) cfg.n_pv = *o.n_pv;
  if (o.n_pn) cfg.n_pn = *o.n_pn;
  if (o.n_cv) cfg.n_cv = *o.n_cv;
  if (o.n_cn) cfg.n_cn = *o.n_cn;
  if (n_r && o.n_r) *n_r = *o.n_r;
}

SweepSpec sweep_spec_from_overrides(const ConfigOverrides& o, const SimConfig& base) {
  if (!o.axis1 || !o.axis1_values || !o.axis2 || !o.axis2_values)
    throw std::runtime_error(
        "sweep spec: axis1, axis1_values, axis2 and axis2_values are required");
  SweepSpec spec;
  spec.base = base;
  apply_overrides(spec.base, nullptr, o);
  spec.n_r = o.n_r.value_or(spec.n_r);
  spec.axis1 = {*o.axis1, *o.axis1_values};
  spec.axis2 = {*o.axis2, *o.axis2_values};
  return spec;
}

}  // namespace slsim
