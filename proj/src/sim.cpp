#include "slsim/sim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slsim {

const char* to_string(Role r) {
  return r == Role::Originator ? "originator" : "propagator";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Susceptible: return "S";
    case Status::Infected: return "I";
    case Status::Recovered: return "R";
  }
  throw std::logic_error("to_string: bad Status");
}

void SimConfig::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("config: gamma outside [0,1]");
  if (!(tc_mu >= 0.0 && tc_mu <= 1.0) || tc_std < 0.0)
    throw std::invalid_argument("config: bad competence distribution");
  if (!(a_mu >= 0.0 && a_mu <= 1.0) || a_std < 0.0)
    throw std::invalid_argument("config: bad base-rate distribution");
  if (!(originator_fraction > 0.0 && originator_fraction <= 1.0))
    throw std::invalid_argument("config: originator fraction outside (0,1]");
  if (originator_count && *originator_count < 1)
    throw std::invalid_argument("config: originator count must be >= 1");
  if (propagator_w < 1.0)
    throw std::invalid_argument("config: propagator uncertain mass must be >= 1");
  if (steps < 0) throw std::invalid_argument("config: steps must be >= 0");
  if (n_pv < 0 || n_pn < 0 || n_cv < 0 || n_cn < 0)
    throw std::invalid_argument("config: negative evidence count");
  if (n_pv + n_pn + n_cv + n_cn == 0)
    throw std::invalid_argument("config: all evidence counts are zero");
}

int Population::originator_count() const {
  return static_cast<int>(std::count_if(agents.begin(), agents.end(), [](const Agent& a) {
    return a.role == Role::Originator;
  }));
}

int Population::propagator_count() const {
  return static_cast<int>(agents.size()) - originator_count();
}

Status classify_status(const Opinion& w) {
  const Expectation e = expectation(w);
  if (e.belief > 0.5) return Status::Infected;
  if (e.disbelief > 0.5) return Status::Recovered;
  return Status::Susceptible;
}

StepMetrics collect_metrics(int t, const Population& pop) {
  StepMetrics m;
  m.t = t;
  const double n = static_cast<double>(pop.agents.size());
  long long props = 0, s = 0, i = 0, r = 0;
  double pb = 0.0, pd = 0.0, pu = 0.0;
  for (const Agent& a : pop.agents) {
    m.mean_b += a.opinion.b();
    m.mean_d += a.opinion.d();
    m.mean_u += a.opinion.u();
    if (a.role == Role::Propagator) {
      ++props;
      pb += a.opinion.b();
      pd += a.opinion.d();
      pu += a.opinion.u();
      switch (a.status) {
        case Status::Susceptible: ++s; break;
        case Status::Infected: ++i; break;
        case Status::Recovered: ++r; break;
      }
    }
  }
  m.mean_b /= n;
  m.mean_d /= n;
  m.mean_u /= n;
  if (props > 0) {
    const double np = static_cast<double>(props);
    m.prop_mean_b = pb / np;
    m.prop_mean_d = pd / np;
    m.prop_mean_u = pu / np;
    m.frac_s = static_cast<double>(s) / np;
    m.frac_i = static_cast<double>(i) / np;
    m.frac_r = static_cast<double>(r) / np;
  } else {
    // All-originator population: fall back to whole-population values.
    m.prop_mean_b = m.mean_b;
    m.prop_mean_d = m.mean_d;
    m.prop_mean_u = m.mean_u;
    long long as = 0, ai = 0, ar = 0;
    for (const Agent& a : pop.agents) {
      switch (a.status) {
        case Status::Susceptible: ++as; break;
        case Status::Infected: ++ai; break;
        case Status::Recovered: ++ar; break;
      }
    }
    m.frac_s = static_cast<double>(as) / n;
    m.frac_i = static_cast<double>(ai) / n;
    m.frac_r = static_cast<double>(ar) / n;
  }
  return m;
}

Population init_population(const Graph& g, const SimConfig& cfg,
                           const EvidenceMatrix& ev) {
  cfg.validate();
  const int n = g.node_count();

  Population pop;
  pop.agents.resize(static_cast<std::size_t>(n));
  pop.active.assign(static_cast<std::size_t>(n), 0);

  Rng pop_rng(derive_seed(cfg.seed, {streams::kPopulation}));
  for (int id = 0; id < n; ++id) {
    Agent& a = pop.agents[static_cast<std::size_t>(id)];
    a.id = id;
    a.tc = pop_rng.trunc_normal(cfg.tc_mu, cfg.tc_std, 0.0, 1.0);
    a.a_raw = pop_rng.trunc_normal(cfg.a_mu, cfg.a_std, 0.0, 1.0);
    a.a_adj = adjust_base_rate(a.a_raw, a.tc);
  }

  Rng seed_rng(derive_seed(cfg.seed, {streams::kSeeding}));
  const std::vector<int> originators =
      cfg.originator_count
          ? seed_originators_count(g, *cfg.originator_count, cfg.strategy, seed_rng)
          : seed_originators(g, cfg.originator_fraction, cfg.strategy, seed_rng);

  for (const int id : originators) {
    Agent& a = pop.agents[static_cast<std::size_t>(id)];
    a.role = Role::Originator;
    Rng ev_rng(derive_seed(cfg.seed, {streams::kEvidence, static_cast<std::uint64_t>(id)}));
    a.opinion = perceived_opinion(map_evidence(a.tc, ev, ev_rng), a.a_adj);
    pop.active[static_cast<std::size_t>(id)] = 1;
  }
  for (Agent& a : pop.agents) {
    if (a.role == Role::Propagator)
      a.opinion = from_evidence({1, 1, cfg.propagator_w}, a.a_adj);
    a.status = classify_status(a.opinion);
  }
  return pop;
}

void step(Population& pop, const Graph& g, const SimConfig& cfg, int t) {
  const int n = static_cast<int>(pop.agents.size());

  std::vector<int> senders;
  for (int id = 0; id < n; ++id)
    if (pop.active[static_cast<std::size_t>(id)]) senders.push_back(id);
  if (!pop.first_full_activation && static_cast<int>(senders.size()) == n)
    pop.first_full_activation = t;

  Rng step_rng(derive_seed(cfg.seed, {streams::kStep, static_cast<std::uint64_t>(t)}));
  step_rng.shuffle(senders);

  // Receivers fuse immediately, so later senders forward already-updated
  // opinions within the same step.
  std::vector<std::uint8_t> pushed(static_cast<std::size_t>(n), 0);
  for (const int j : senders) {
    const Opinion& wj = pop.agents[static_cast<std::size_t>(j)].opinion;
    for (const int i : g.neighbors(j)) {
      pushed[static_cast<std::size_t>(i)] = 1;
      Agent& recv = pop.agents[static_cast<std::size_t>(i)];
      if (recv.role != Role::Propagator) continue;
      const double trust = similarity(recv.opinion, wj);
      if (const auto fused = consensus(recv.opinion, discount(wj, trust)))
        recv.opinion = *fused;
    }
  }

  for (Agent& a : pop.agents) {
    if (a.role == Role::Propagator) a.opinion = decay(a.opinion, cfg.gamma);
    a.status = classify_status(a.opinion);
  }

  for (int id = 0; id < n; ++id)
    if (pushed[static_cast<std::size_t>(id)]) pop.active[static_cast<std::size_t>(id)] = 1;
}

RunResult run(const Graph& g, const SimConfig& cfg, const EvidenceMatrix& ev) {
  RunResult res;
  res.population = init_population(g, cfg, ev);
  if (cfg.steps == 0) {
    res.metrics.push_back(collect_metrics(0, res.population));
    return res;
  }
  res.metrics.reserve(static_cast<std::size_t>(cfg.steps));
  for (int t = 1; t <= cfg.steps; ++t) {
    step(res.population, g, cfg, t);
    res.metrics.push_back(collect_metrics(t, res.population));
  }
  return res;
}

RunResult run(const Graph& g, const SimConfig& cfg) {
  cfg.validate();
  Rng matrix_rng(derive_seed(cfg.seed, {streams::kMatrix}));
  const EvidenceMatrix ev =
      build_matrix(cfg.n_pv, cfg.n_pn, cfg.n_cv, cfg.n_cn, matrix_rng);
  return run(g, cfg, ev);
}

}  // namespace slsim
