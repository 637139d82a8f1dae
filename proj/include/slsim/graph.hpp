#pragma once
// Undirected social graphs: edge-list ingestion, synthetic generators,
// structural statistics and originator seeding. Node IDs are dense integers
// 0..n-1; a Graph is immutable once built and safe to share across threads.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "slsim/rng.hpp"

namespace slsim {

class Graph {
 public:
  Graph() = default;

  // Validates and normalizes: IDs in [0,n), no self-loops, no duplicates.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int node_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  // Normalized (u < v), lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct GraphStats {
  int n = 0;
  long long edge_count = 0;
  double avg_degree = 0.0;
  double avg_clustering = 0.0;
  bool connected = false;
};

// Parses a whitespace edge list (`<u> <v>` per line, `#` comments ignored).
// Self-loops are dropped, duplicate edges collapsed. IDs are kept as-is when
// the source already uses dense 0..n-1 IDs, otherwise remapped densely in
// first-seen order, so write_edge_list/parse_edge_list round-trips exactly.
// Malformed lines and empty graphs raise errors carrying the line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Barabasi-Albert preferential attachment: a complete seed on m nodes, then
// each new node attaches to m distinct degree-weighted targets. Connected by
// construction; average degree ~2m.
Graph generate_preferential_attachment(int n, int m, std::uint64_t seed);

// Watts-Strogatz small world: ring lattice with k neighbors per node (k even)
// and per-edge rewiring probability p. Regenerates with a derived seed until
// connected.
Graph generate_small_world(int n, int k, double p, std::uint64_t seed);

// Average local clustering counts degree<2 nodes as 0.
GraphStats compute_stats(const Graph& g);

enum class SeedStrategy { UniformRandom, HighestDegree };

// max(1, round(fraction*n)) distinct node IDs, ascending.
std::vector<int> seed_originators(const Graph& g, double fraction,
                                  SeedStrategy strategy, Rng& rng);
// Explicit-count variant; highest-degree breaks degree ties by ascending ID.
std::vector<int> seed_originators_count(const Graph& g, int count,
                                        SeedStrategy strategy, Rng& rng);

}  // namespace slsim
