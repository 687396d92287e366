#pragma once

// Shared generators and scan-based reference sets for the test suites. The
// closure scan here deliberately walks all 2^n masks so it cannot share a
// bug with the frontier expansion it checks.

#include <random>
#include <vector>

#include "trimlat/bitlattice.hpp"
#include "trimlat/graphs.hpp"

namespace ttest {

using trimlat::Graph;
using trimlat::Mask;
using trimlat::SetFamily;
using trimlat::SparseTable;

inline std::vector<Mask> scan_closure(int n, const std::vector<Mask>& members) {
  std::vector<Mask> out;
  const Mask top = trimlat::universe_mask(n);
  for (Mask x = 0;; ++x) {
    for (Mask m : members)
      if (trimlat::is_subset_of(m, x)) {
        out.push_back(x);
        break;
      }
    if (x == top) break;
  }
  return out;
}

inline SparseTable random_sparse(int n, int support_size, std::mt19937& rng) {
  SparseTable f(n);
  std::uniform_int_distribution<Mask> masks(0, trimlat::universe_mask(n));
  std::uniform_int_distribution<int> values(-9, 9);
  for (int i = 0; i < support_size; ++i) {
    int v = values(rng);
    if (v == 0) v = 1;
    f.set(masks(rng), v);
  }
  return f;
}

inline SetFamily random_family(int n, int count, std::mt19937& rng) {
  std::uniform_int_distribution<Mask> masks(0, trimlat::universe_mask(n));
  std::vector<Mask> members;
  for (int i = 0; i < count; ++i) members.push_back(masks(rng));
  return SetFamily(n, std::move(members));
}

inline Graph random_graph(int n, double edge_probability, std::mt19937& rng) {
  std::bernoulli_distribution keep(edge_probability);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (keep(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Random graph with every degree <= cap and, when achievable, >= 1.
inline Graph random_bounded_graph(int n, int degree_cap, std::mt19937& rng) {
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::bernoulli_distribution keep(0.7);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : candidates) {
    if (degree[u] >= degree_cap || degree[v] >= degree_cap) continue;
    bool isolated_fix = degree[u] == 0 || degree[v] == 0;
    if (!isolated_fix && !keep(rng)) continue;
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

inline Graph edgeless_graph(int n) { return Graph(n, {}); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges())
    edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

inline Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer cycle
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);                // spokes
  }
  return Graph(10, edges);
}

}  // namespace ttest
