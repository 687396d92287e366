#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trimlat/bitlattice.hpp"

namespace trimlat {

/// Undirected simple graph over vertices 0..n-1, adjacency as one Mask per
/// vertex. Duplicate edges collapse; self-loops are rejected.
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
      : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count), 0) {
    if (vertex_count < 1 || vertex_count > kMaxUniverse)
      throw std::invalid_argument("vertex count must be in [1, " +
                                  std::to_string(kMaxUniverse) + "]");
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
      adj_[u] |= element_bit(v);
      adj_[v] |= element_bit(u);
    }
  }

  int vertex_count() const { return n_; }
  Mask vertices() const { return universe_mask(n_); }
  Mask neighbours(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return mask_contains(adj_[u], v); }
  int degree(int v) const { return mask_rank(adj_[v]); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
};

/// The sets A_v, one per vertex. Unpadded they are the closed
/// neighbourhoods {v} + N(v); padding grows them until every vertex lies in
/// exactly max_degree + 1 of them.
struct NeighbourhoodCover {
  std::vector<Mask> sets;
  bool padded = false;

  int size(int v) const { return mask_rank(sets[v]); }
  std::uint64_t total_size() const {
    std::uint64_t s = 0;
    for (Mask a : sets) s += mask_rank(a);
    return s;
  }
};

inline NeighbourhoodCover closed_neighbourhoods(const Graph& g) {
  NeighbourhoodCover cover;
  cover.sets.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    cover.sets.push_back(g.neighbours(v) | element_bit(v));
  return cover;
}

/// Adds each vertex u of degree d(u) < max_degree to exactly
/// max_degree - d(u) further sets, chosen by ascending set index among sets
/// not already containing u. Needs n >= max_degree + 1 so enough candidate
/// sets exist.
inline NeighbourhoodCover pad_neighbourhoods(NeighbourhoodCover cover,
                                             const Graph& g) {
  if (cover.padded) throw std::invalid_argument("cover is already padded");
  const int n = g.vertex_count();
  const int delta = g.max_degree();
  if (n < delta + 1)
    throw std::invalid_argument("padding requires n >= max_degree + 1");
  for (int u = 0; u < n; ++u) {
    int missing = delta - g.degree(u);
    for (int v = 0; v < n && missing > 0; ++v) {
      if (!mask_contains(cover.sets[v], u)) {
        cover.sets[v] |= element_bit(u);
        --missing;
      }
    }
  }
  cover.padded = true;
  return cover;
}

/// Every vertex outside X has at least one neighbour in X.
inline bool is_dominating(const Graph& g, Mask x) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mask_contains(x, v)) continue;
    if ((g.neighbours(v) & x) == 0) return false;
  }
  return true;
}

/// No two vertices of X are adjacent.
inline bool is_independent(const Graph& g, Mask x) {
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (g.neighbours(v) & x) return false;
  }
  return true;
}

/// The subgraph induced by X is two-colourable (iterative BFS colouring on
/// the masked adjacency).
inline bool induces_bipartite(const Graph& g, Mask x) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (!mask_contains(x, start) || colour[start] != -1) continue;
    colour[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Mask rest = g.neighbours(v) & x; rest != 0; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace detail {

// Depth-first in/out decisions over vertices; prune once some vertex can no
// longer be dominated by the vertices still available.
template <class Collect>
void dominating_dfs(const Graph& g, int next, Mask in, Mask undecided,
                    Collect&& collect) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    Mask closed = g.neighbours(u) | element_bit(u);
    if ((closed & (in | undecided)) == 0) return;
  }
  if (next == n) {
    collect(in);
    return;
  }
  Mask b = element_bit(next);
  dominating_dfs(g, next + 1, in | b, undecided & ~b, collect);
  dominating_dfs(g, next + 1, in, undecided & ~b, collect);
}

}  // namespace detail

/// All dominating sets with no dominating proper subset.
inline SetFamily enumerate_minimal_dominating(const Graph& g) {
  std::vector<Mask> out;
  auto collect = [&](Mask d) {
    if (!is_dominating(g, d)) return;
    for (Mask rest = d; rest != 0; rest &= rest - 1) {
      Mask without = d & ~(rest & -rest);
      if (is_dominating(g, without)) return;
    }
    out.push_back(d);
  };
  detail::dominating_dfs(g, 0, 0, g.vertices(), collect);
  return SetFamily(g.vertex_count(), std::move(out));
}

/// All independent sets to which no further vertex can be added. These are
/// exactly the independent dominating sets.
inline SetFamily enumerate_maximal_independent(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Mask> out;
  auto rec = [&](auto&& self, int next, Mask in) -> void {
    // A vertex with its whole closed neighbourhood excluded can never be
    // dominated, so no extension of `in` is maximal.
    Mask undecided = g.vertices() & ~(universe_mask(next));
    for (int u = 0; u < next; ++u) {
      Mask closed = g.neighbours(u) | element_bit(u);
      if ((closed & (in | undecided)) == 0) return;
    }
    if (next == n) {
      if (is_dominating(g, in)) out.push_back(in);
      return;
    }
    if ((g.neighbours(next) & in) == 0)
      self(self, next + 1, in | element_bit(next));
    self(self, next + 1, in);
  };
  rec(rec, 0, 0);
  return SetFamily(n, std::move(out));
}

/// All vertex sets inducing a bipartite subgraph that are maximal under
/// inclusion among such sets.
inline SetFamily enumerate_maximal_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Mask> out;
  auto rec = [&](auto&& self, int next, Mask in) -> void {
    if (next == n) {
      for (int v = 0; v < n; ++v) {
        if (mask_contains(in, v)) continue;
        if (induces_bipartite(g, in | element_bit(v))) return;
      }
      out.push_back(in);
      return;
    }
    if (induces_bipartite(g, in | element_bit(next)))
      self(self, next + 1, in | element_bit(next));
    self(self, next + 1, in);
  };
  rec(rec, 0, 0);
  return SetFamily(n, std::move(out));
}

/// |D|: exhaustive scan of all 2^n subsets. Bounds-checking utility,
/// exponential by design.
inline BigCount count_dominating_sets(const Graph& g) {
  const int n = g.vertex_count();
  BigCount count = 0;
  const Mask top = universe_mask(n);
  for (Mask x = 0;; ++x) {
    if (is_dominating(g, x)) ++count;
    if (x == top) break;
  }
  return count;
}

}  // namespace trimlat
