#include "slsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string metrics_csv(const std::vector<StepMetrics>& metrics) {
  std::string out = "t,mean_b,mean_d,mean_u,frac_S,frac_I,frac_R\n";
  for (const StepMetrics& m : metrics) {
    out += std::to_string(m.t);
    for (const double v : {m.mean_b, m.mean_d, m.mean_u, m.frac_s, m.frac_i, m.frac_r}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string snapshot_csv(const Population& pop) {
  std::string out = "id,role,tc,a_raw,a_adj,b,d,u,status\n";
  for (const Agent& a : pop.agents) {
    out += std::to_string(a.id);
    out += ',';
    out += to_string(a.role);
    for (const double v : {a.tc, a.a_raw, a.a_adj, a.opinion.b(), a.opinion.d(), a.opinion.u()}) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += to_string(a.status);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out =
      "axis1_name,axis1_value,axis2_name,axis2_value,"
      "mean_b,std_b,mean_d,std_d,mean_u,std_u,frac_R,std_R,n_r\n";
  for (const SweepCell& c : result.cells) {
    out += result.axis1_name;
    out += ',';
    out += format_double(c.axis1_value);
    out += ',';
    out += result.axis2_name;
    out += ',';
    out += format_double(c.axis2_value);
    for (const double v : {c.mean_b, c.std_b, c.mean_d, c.std_d, c.mean_u, c.std_u,
                           c.frac_r, c.std_r}) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += std::to_string(result.n_r);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json stats_json(const GraphStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["edge_count"] = s.edge_count;
  j["avg_degree"] = s.avg_degree;
  j["avg_clustering"] = s.avg_clustering;
  j["connected"] = s.connected;
  return j;
}

nlohmann::ordered_json config_json(const SimConfig& cfg) {
  nlohmann::ordered_json j;
  j["gamma"] = cfg.gamma;
  j["tc_mu"] = cfg.tc_mu;
  j["tc_std"] = cfg.tc_std;
  j["a_mu"] = cfg.a_mu;
  j["a_std"] = cfg.a_std;
  j["originator_fraction"] = cfg.originator_fraction;
  if (cfg.originator_count)
    j["originator_count"] = *cfg.originator_count;
  else
    j["originator_count"] = nullptr;
  j["originator_strategy"] =
      cfg.strategy == SeedStrategy::UniformRandom ? "uniform-random" : "highest-degree";
  j["propagator_w"] = cfg.propagator_w;
  j["steps"] = cfg.steps;
  j["seed"] = cfg.seed;
  j["n_pv"] = cfg.n_pv;
  j["n_pn"] = cfg.n_pn;
  j["n_cv"] = cfg.n_cv;
  j["n_cn"] = cfg.n_cn;
  return j;
}

namespace {

// Parses "k=v,k=v,..." after the model token.
std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error("graph source: bad value for '" + key + "': " + v);
  }
}

double parse_dbl(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error("graph source: bad value for '" + key + "': " + v);
  }
}

Graph generate_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(spec);
  while (std::getline(ss, cur, ',')) parts.push_back(cur);
  if (parts.empty()) throw std::runtime_error("graph source: empty synthetic spec");

  const std::string model = parts[0];
  long long n = -1, m = 4, k = 6;
  double p = 0.1;
  std::uint64_t seed = 1;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("graph source: expected k=v, got '" + parts[i] + "'");
    const std::string key = parts[i].substr(0, eq);
    const std::string val = parts[i].substr(eq + 1);
    if (key == "n") n = static_cast<long long>(parse_u64(key, val));
    else if (key == "m") m = static_cast<long long>(parse_u64(key, val));
    else if (key == "k") k = static_cast<long long>(parse_u64(key, val));
    else if (key == "p") p = parse_dbl(key, val);
    else if (key == "seed") seed = parse_u64(key, val);
    else throw std::runtime_error("graph source: unknown key '" + key + "'");
  }
  if (n < 0) throw std::runtime_error("graph source: synthetic spec needs n=<count>");

  if (model == "ba" || model == "preferential-attachment")
    return generate_preferential_attachment(static_cast<int>(n), static_cast<int>(m), seed);
  if (model == "ws" || model == "small-world")
    return generate_small_world(static_cast<int>(n), static_cast<int>(k), p, seed);
  throw std::runtime_error("graph source: unknown model '" + model +
                           "' (use ba|preferential-attachment or ws|small-world)");
}

}  // namespace

LoadedGraph load_graph_source(const std::string& source) {
  constexpr const char* kPrefix = "synthetic:";
  if (source.rfind(kPrefix, 0) == 0)
    return {generate_from_spec(source.substr(std::string(kPrefix).size())), source};
  return {parse_edge_list_file(source), source};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace slsim
