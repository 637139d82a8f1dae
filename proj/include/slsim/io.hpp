#pragma once
// Output formats and graph-source loading. CSV floats are printed with 9
// significant digits, '.' decimal separator, no locale dependence, so output
// is byte-stable for golden comparisons.

#include <string>

#include "slsim/graph.hpp"
#include "slsim/sim.hpp"
#include "slsim/sweep.hpp"

#include <json.hpp>

namespace slsim {

std::string format_double(double v);

// `t,mean_b,mean_d,mean_u,frac_S,frac_I,frac_R` (means over all agents,
// fractions over propagators).
std::string metrics_csv(const std::vector<StepMetrics>& metrics);

// `id,role,tc,a_raw,a_adj,b,d,u,status`
std::string snapshot_csv(const Population& pop);

// `axis1_name,axis1_value,axis2_name,axis2_value,mean_b,std_b,mean_d,std_d,
//  mean_u,std_u,frac_R,std_R,n_r`
std::string sweep_csv(const SweepResult& result);

nlohmann::ordered_json stats_json(const GraphStats& s);
nlohmann::ordered_json config_json(const SimConfig& cfg);

// A graph plus where it came from, for manifests.
struct LoadedGraph {
  Graph graph;
  std::string source;
};

// `source` is either an edge-list file path or a synthetic spec:
//   synthetic:ba,n=<N>,m=<M>[,seed=<S>]           (preferential attachment)
//   synthetic:ws,n=<N>,k=<K>,p=<P>[,seed=<S>]     (small world)
// Model aliases: ba|preferential-attachment, ws|small-world.
LoadedGraph load_graph_source(const std::string& source);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace slsim
