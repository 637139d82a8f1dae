#include "slsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace slsim {

namespace {

long long to_count(const std::string& name, double value) {
  const long long c = std::llround(value);
  if (value != static_cast<double>(c) || c < 0)
    throw std::invalid_argument("sweep: " + name + " must be a non-negative integer");
  return c;
}

std::vector<double> steps_of_1000() {
  return {0, 1000, 2000, 3000, 4000, 5000, 6000};
}

std::vector<double> tc_levels() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

}  // namespace

void apply_parameter(SimConfig& cfg, const std::string& name, double value) {
  if (name == "n_pv") cfg.n_pv = to_count(name, value);
  else if (name == "n_pn") cfg.n_pn = to_count(name, value);
  else if (name == "n_cv") cfg.n_cv = to_count(name, value);
  else if (name == "n_cn") cfg.n_cn = to_count(name, value);
  else if (name == "gamma") cfg.gamma = value;
  else if (name == "tc_mu") cfg.tc_mu = value;
  else if (name == "tc_std") cfg.tc_std = value;
  else if (name == "a_mu") cfg.a_mu = value;
  else if (name == "a_std") cfg.a_std = value;
  else if (name == "propagator_w") cfg.propagator_w = value;
  else if (name == "steps") cfg.steps = static_cast<int>(to_count(name, value));
  else if (name == "originator_fraction") cfg.originator_fraction = value;
  else
    throw std::invalid_argument("sweep: unknown parameter '" + name + "'");
  cfg.validate();
}

std::vector<std::string> preset_names() {
  return {"valuable-sweep", "noisy-sweep", "tc-under-pv", "tc-under-cv"};
}

SweepSpec preset(const std::string& name) {
  SweepSpec spec;
  spec.base = SimConfig{};  // Table-style defaults; evidence classes at 1000
  if (name == "valuable-sweep") {
    spec.axis1 = {"n_pv", steps_of_1000()};
    spec.axis2 = {"n_cv", steps_of_1000()};
  } else if (name == "noisy-sweep") {
    spec.axis1 = {"n_pn", steps_of_1000()};
    spec.axis2 = {"n_cn", steps_of_1000()};
  } else if (name == "tc-under-pv") {
    spec.base.tc_std = 0.0;
    spec.axis1 = {"tc_mu", tc_levels()};
    spec.axis2 = {"n_pv", steps_of_1000()};
  } else if (name == "tc-under-cv") {
    spec.base.tc_std = 0.0;
    spec.axis1 = {"tc_mu", tc_levels()};
    spec.axis2 = {"n_cv", steps_of_1000()};
  } else {
    std::string valid;
    for (const auto& p : preset_names()) valid += (valid.empty() ? "" : ", ") + p;
    throw std::invalid_argument("unknown preset '" + name + "' (valid: " + valid + ")");
  }
  return spec;
}

SweepResult run_sweep(const SweepSpec& spec, const Graph& g, int workers) {
  if (spec.n_r < 1) throw std::invalid_argument("sweep: n_r must be >= 1");
  if (workers < 1) throw std::invalid_argument("sweep: worker count must be >= 1");
  if (spec.axis1.values.empty() || spec.axis2.values.empty())
    throw std::invalid_argument("sweep: empty axis");

  // Validate axis names and all cell configs up front, before any run.
  std::vector<SimConfig> cell_cfgs;
  for (const double v1 : spec.axis1.values) {
    for (const double v2 : spec.axis2.values) {
      SimConfig cfg = spec.base;
      apply_parameter(cfg, spec.axis1.name, v1);
      apply_parameter(cfg, spec.axis2.name, v2);
      cell_cfgs.push_back(cfg);
    }
  }

  const std::size_t n_cells = cell_cfgs.size();
  const std::size_t n_jobs = n_cells * static_cast<std::size_t>(spec.n_r);

  struct FinalRow {
    double mean_b = 0.0, mean_d = 0.0, mean_u = 0.0, frac_r = 0.0;
  };
  std::vector<FinalRow> rows(n_jobs);
  std::vector<std::uint64_t> seeds(n_jobs);

  std::atomic<std::size_t> next_job{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mu;

  auto worker = [&]() {
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= n_jobs || failed.load()) return;
      const std::size_t cell = job / static_cast<std::size_t>(spec.n_r);
      const std::size_t rep = job % static_cast<std::size_t>(spec.n_r);
      try {
        SimConfig cfg = cell_cfgs[cell];
        cfg.seed = derive_seed(spec.base.seed,
                               {static_cast<std::uint64_t>(cell),
                                static_cast<std::uint64_t>(rep)});
        seeds[job] = cfg.seed;
        const RunResult res = run(g, cfg);
        const StepMetrics& last = res.metrics.back();
        rows[job] = {last.mean_b, last.mean_d, last.mean_u, last.frac_r};
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mu);
        failure = e.what();
        failed.store(true);
        return;
      }
    }
  };

  const int thread_count = std::min<std::size_t>(static_cast<std::size_t>(workers), n_jobs);
  std::vector<std::thread> threads;
  for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (failed.load()) throw std::runtime_error("sweep run failed: " + failure);

  SweepResult result;
  result.axis1_name = spec.axis1.name;
  result.axis2_name = spec.axis2.name;
  result.n_r = spec.n_r;
  result.cells.reserve(n_cells);

  const double nr = static_cast<double>(spec.n_r);
  std::size_t cell = 0;
  for (const double v1 : spec.axis1.values) {
    for (const double v2 : spec.axis2.values) {
      SweepCell out;
      out.axis1_value = v1;
      out.axis2_value = v2;
      const std::size_t base = cell * static_cast<std::size_t>(spec.n_r);
      auto aggregate = [&](auto select, double& mean, double& stdev) {
        double sum = 0.0;
        for (int r = 0; r < spec.n_r; ++r) sum += select(rows[base + static_cast<std::size_t>(r)]);
        mean = sum / nr;
        double ss = 0.0;
        for (int r = 0; r < spec.n_r; ++r) {
          const double dv = select(rows[base + static_cast<std::size_t>(r)]) - mean;
          ss += dv * dv;
        }
        stdev = spec.n_r > 1 ? std::sqrt(ss / (nr - 1.0)) : 0.0;
      };
      aggregate([](const FinalRow& r) { return r.mean_b; }, out.mean_b, out.std_b);
      aggregate([](const FinalRow& r) { return r.mean_d; }, out.mean_d, out.std_d);
      aggregate([](const FinalRow& r) { return r.mean_u; }, out.mean_u, out.std_u);
      aggregate([](const FinalRow& r) { return r.frac_r; }, out.frac_r, out.std_r);
      out.seeds.assign(seeds.begin() + static_cast<std::ptrdiff_t>(base),
                       seeds.begin() + static_cast<std::ptrdiff_t>(base + static_cast<std::size_t>(spec.n_r)));
      result.cells.push_back(std::move(out));
      ++cell;
    }
  }
  return result;
}

}  // namespace slsim
