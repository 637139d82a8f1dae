#include "slsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace slsim {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw std::invalid_argument("Graph: node count must be positive");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<long long, long long>> raw;
  std::string line;
  int line_no = 0;
  long long min_id = std::numeric_limits<long long>::max();
  long long max_id = std::numeric_limits<long long>::min();
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two integer node IDs");
    raw.emplace_back(u, v);
    min_id = std::min({min_id, u, v});
    max_id = std::max({max_id, u, v});
  }
  if (raw.empty()) throw std::runtime_error("edge list: no edges");

  // Keep source IDs when they are already dense 0..n-1; otherwise remap in
  // first-seen order.
  std::unordered_map<long long, int> remap;
  remap.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    remap.emplace(u, static_cast<int>(remap.size()));
    remap.emplace(v, static_cast<int>(remap.size()));
  }
  const long long n_ids = static_cast<long long>(remap.size());
  const bool dense = min_id == 0 && max_id == n_ids - 1;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    const int du = dense ? static_cast<int>(u) : remap.at(u);
    const int dv = dense ? static_cast<int>(v) : remap.at(v);
    edges.emplace_back(du, dv);
  }
  if (edges.empty()) throw std::runtime_error("edge list: no usable edges");
  return Graph::from_edges(static_cast<int>(n_ids), std::move(edges));
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  try {
    return parse_edge_list(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph generate_preferential_attachment(int n, int m, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("preferential attachment: n must be >= 3");
  if (m < 1 || m >= n)
    throw std::invalid_argument("preferential attachment: need 1 <= m < n");

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoint_pool;  // one entry per endpoint -> degree-weighted draw
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      edges.emplace_back(i, j);
      endpoint_pool.push_back(i);
      endpoint_pool.push_back(j);
    }
  }
  std::vector<int> targets;
  for (int v = m; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const int t =
          endpoint_pool.empty()
              ? static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(v)))
              : endpoint_pool[rng.uniform_below(endpoint_pool.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (const int t : targets) {
      edges.emplace_back(t, v);
      endpoint_pool.push_back(t);
      endpoint_pool.push_back(v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

namespace {

bool is_connected(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

Graph generate_small_world(int n, int k, double p, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("small world: n must be >= 3");
  if (k < 2 || k % 2 != 0 || k >= n)
    throw std::invalid_argument("small world: k must be even, 2 <= k < n");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("small world: rewiring probability outside [0,1]");

  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Rng rng(derive_seed(seed, {attempt}));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    auto connect = [&](int a, int b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    };
    auto adjacent = [&](int a, int b) {
      const auto& nb = adj[static_cast<std::size_t>(a)];
      return std::find(nb.begin(), nb.end(), b) != nb.end();
    };
    for (int i = 0; i < n; ++i)
      for (int j = 1; j <= k / 2; ++j) connect(i, (i + j) % n);

    // Rewire the far endpoint of each original lattice edge with prob p.
    for (int i = 0; i < n; ++i) {
      for (int j = 1; j <= k / 2; ++j) {
        if (!(rng.uniform_open01() < p)) continue;
        const int old = (i + j) % n;
        int fresh = -1;
        for (int tries = 0; tries < 4 * n; ++tries) {
          const int cand = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
          if (cand != i && !adjacent(i, cand)) {
            fresh = cand;
            break;
          }
        }
        if (fresh < 0 || !adjacent(i, old)) continue;  // saturated node; keep edge
        auto drop = [&](int a, int b) {
          auto& nb = adj[static_cast<std::size_t>(a)];
          nb.erase(std::find(nb.begin(), nb.end(), b));
        };
        drop(i, old);
        drop(old, i);
        connect(i, fresh);
      }
    }

    if (!is_connected(n, adj)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      for (const int w : adj[static_cast<std::size_t>(v)])
        if (v < w) edges.emplace_back(v, w);
    return Graph::from_edges(n, std::move(edges));
  }
  throw std::runtime_error("small world: failed to generate a connected graph");
}

GraphStats compute_stats(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("compute_stats: empty graph");
  GraphStats s;
  s.n = g.node_count();
  s.edge_count = g.edge_count();
  s.avg_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.n);

  double clustering_sum = 0.0;
  for (int v = 0; v < s.n; ++v) {
    const auto& nb = g.neighbors(v);
    const int k = static_cast<int>(nb.size());
    if (k < 2) continue;
    long long links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) ++links;
    clustering_sum += static_cast<double>(links) /
                      (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
  }
  s.avg_clustering = clustering_sum / static_cast<double>(s.n);

  std::vector<char> seen(static_cast<std::size_t>(s.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  s.connected = reached == s.n;
  return s;
}

std::vector<int> seed_originators(const Graph& g, double fraction,
                                  SeedStrategy strategy, Rng& rng) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("seed_originators: fraction outside (0,1]");
  const int count = std::max<long long>(
      1, std::llround(fraction * static_cast<double>(g.node_count())));
  return seed_originators_count(g, count, strategy, rng);
}

std::vector<int> seed_originators_count(const Graph& g, int count,
                                        SeedStrategy strategy, Rng& rng) {
  const int n = g.node_count();
  if (count < 1 || count > n)
    throw std::invalid_argument("seed_originators: count outside [1, n]");

  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  if (strategy == SeedStrategy::UniformRandom) {
    // Partial Fisher-Yates: the first `count` slots are the sample.
    for (int i = 0; i < count; ++i) {
      const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
      std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
  } else {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  }
  std::vector<int> picked(ids.begin(), ids.begin() + count);
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace slsim
