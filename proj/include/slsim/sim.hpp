#pragma once
// The agent population and propagation loop. Originators form a fixed opinion
// from the evidence matrix at init and never change; propagators start
// near-vacuous and update through similarity-discounted consensus, decaying a
// little every step. Statuses follow an SIR reading of the expected
// belief/disbelief.

#include <cstdint>
#include <optional>
#include <vector>

#include "slsim/evidence.hpp"
#include "slsim/graph.hpp"
#include "slsim/opinion.hpp"

namespace slsim {

// Stream tags for per-run seed derivation.
namespace streams {
inline constexpr std::uint64_t kPopulation = 1;  // tc / a_raw sampling
inline constexpr std::uint64_t kSeeding = 2;     // originator selection
inline constexpr std::uint64_t kEvidence = 3;    // per-originator perception
inline constexpr std::uint64_t kStep = 4;        // per-step sender shuffle
inline constexpr std::uint64_t kMatrix = 5;      // evidence matrix shuffle
}  // namespace streams

enum class Role { Originator, Propagator };
enum class Status { Susceptible, Infected, Recovered };

const char* to_string(Role r);
const char* to_string(Status s);

struct Agent {
  int id = 0;
  Role role = Role::Propagator;
  Opinion opinion;
  double tc = 0.5;     // topic competence
  double a_raw = 0.5;  // sampled base rate
  double a_adj = 0.5;  // competence-adjusted base rate (carried by opinion.a)
  Status status = Status::Susceptible;
};

struct SimConfig {
  double gamma = 0.05;
  double tc_mu = 0.5, tc_std = 0.1;
  double a_mu = 0.5, a_std = 0.1;
  double originator_fraction = 0.01;
  std::optional<int> originator_count;  // overrides the fraction when set
  SeedStrategy strategy = SeedStrategy::UniformRandom;
  double propagator_w = 100.0;  // initial uncertain-evidence mass
  int steps = 50;
  std::uint64_t seed = 1;
  long long n_pv = 1000, n_pn = 1000, n_cv = 1000, n_cn = 1000;

  void validate() const;
};

struct StepMetrics {
  int t = 0;
  // Opinion means over all agents.
  double mean_b = 0.0, mean_d = 0.0, mean_u = 0.0;
  // Opinion means over propagators only (same values as above when the
  // population has no propagators).
  double prop_mean_b = 0.0, prop_mean_d = 0.0, prop_mean_u = 0.0;
  // Status fractions over propagators.
  double frac_s = 0.0, frac_i = 0.0, frac_r = 0.0;
};

struct Population {
  std::vector<Agent> agents;
  std::vector<std::uint8_t> active;  // has propagated at least once / will this step
  std::optional<int> first_full_activation;

  int originator_count() const;
  int propagator_count() const;
};

// Expected-probability SIR reading: Infected when the expected belief exceeds
// 1/2, Recovered when the expected disbelief does, Susceptible on the exact
// boundary. Comparisons are exact so a fresh symmetric propagator (a = 0.5)
// is Susceptible.
Status classify_status(const Opinion& w);

StepMetrics collect_metrics(int t, const Population& pop);

// Samples competence and base rates, picks originators, and forms opinions:
// originators perceive the shared evidence matrix through their own
// competence (each with its own derived rng stream), propagators start from
// (r,s,W) = (1,1,propagator_w). Deterministic given cfg.seed.
Population init_population(const Graph& g, const SimConfig& cfg,
                           const EvidenceMatrix& ev);

// One simulation step: active agents push their current opinion to all
// neighbors in a shuffled order, receiving propagators fuse immediately
// (sequential-asynchronous), then every propagator decays, then statuses are
// reclassified. Activation spreads as a frontier: whoever was pushed to
// becomes active next step, and active agents stay active.
void step(Population& pop, const Graph& g, const SimConfig& cfg, int t);

struct RunResult {
  std::vector<StepMetrics> metrics;  // t=1..steps, or a single t=0 row when steps==0
  Population population;
};

RunResult run(const Graph& g, const SimConfig& cfg, const EvidenceMatrix& ev);
// Convenience: builds the evidence matrix from cfg counts and cfg.seed.
RunResult run(const Graph& g, const SimConfig& cfg);

}  // namespace slsim
