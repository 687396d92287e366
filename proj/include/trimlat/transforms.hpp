#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trimlat/bitlattice.hpp"

namespace trimlat {

/// A 2x2 kernel v(x,y); the transform of f is
///   f^(X) = sum over Y of v(x1,y1)...v(xn,yn) f(Y)
/// with x_j, y_j the incidence bits of X and Y.
struct KernelSpec {
  double v00, v01, v10, v11;

  double at(int x, int y) const {
    return x == 0 ? (y == 0 ? v00 : v01) : (y == 0 ? v10 : v11);
  }

  static KernelSpec identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// v(x,y) = [y <= x]: subset sums.
  static KernelSpec zeta() { return {1.0, 0.0, 1.0, 1.0}; }
  /// v(x,y) = [y <= x] (-1)^(x-y): signed subset sums, inverse of zeta().
  static KernelSpec moebius() { return {1.0, 0.0, -1.0, 1.0}; }
};

inline constexpr int kMaxDenseUniverse = 24;

/// Generic dense transform over all 2^n lattice points, one coordinate at a
/// time, O(2^n * n) combines. Reference/benchmark baseline; exact-integer
/// work goes through the trimmed transforms instead.
inline std::vector<double> yates_transform(std::vector<double> f,
                                           const KernelSpec& kernel) {
  std::size_t size = f.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("dense table size must be a power of two");
  int n = std::countr_zero(size);
  if (n > kMaxDenseUniverse)
    throw std::invalid_argument("dense transform capped at n <= " +
                                std::to_string(kMaxDenseUniverse));
  for (int j = 0; j < n; ++j) {
    const Mask jb = element_bit(j);
    for (Mask x = 0; x < size; ++x) {
      if (x & jb) continue;
      double lo = f[x], hi = f[x | jb];
      f[x] = kernel.v00 * lo + kernel.v01 * hi;
      f[x | jb] = kernel.v10 * lo + kernel.v11 * hi;
    }
  }
  return f;
}

namespace detail {

struct RunStats {
  std::uint64_t visited = 0;
};

/// Bottom-up pointwise walk over the upper closure of the seed masks.
///
/// Pops masks in nondecreasing rank; for each popped X builds a per-mask
/// State via make(X, parent) where parent(P) returns the State of P if P was
/// processed at the previous rank (nullptr otherwise, which the recursions
/// read as zero), then reports it through visit(X, state). Each superset
/// X + {j} is pushed only if filter accepts it; states are retained for the
/// previous and current rank only, which is all the look-downs can reach.
template <class State, class Filter, class MakeState, class Visit>
RunStats run_pointwise(int n, const std::vector<Mask>& seeds, Filter&& filter,
                       PopOrder order, MakeState&& make, Visit&& visit) {
  RankFrontier frontier(n, order);
  for (Mask m : seeds) frontier.push(m);

  std::unordered_map<Mask, State> prev, cur;
  int cur_rank = std::numeric_limits<int>::min();
  RunStats stats;

  while (auto popped = frontier.pop()) {
    const Mask x = *popped;
    const int r = mask_rank(x);
    if (r != cur_rank) {
      if (r == cur_rank + 1) {
        prev = std::move(cur);
      } else {
        prev.clear();
      }
      cur.clear();
      cur_rank = r;
    }
    auto parent = [&prev](Mask p) -> const State* {
      auto it = prev.find(p);
      return it == prev.end() ? nullptr : &it->second;
    };
    State state = make(x, parent);
    visit(x, state);
    cur.emplace(x, std::move(state));
    ++stats.visited;
    for (Mask rest = universe_mask(n) & ~x; rest != 0; rest &= rest - 1) {
      Mask child = x | (rest & -rest);
      if (filter(child)) frontier.push(child);
    }
  }
  return stats;
}

/// Level vector g_0..g_n for one mask; g_j folds coordinate j into the sum.
using LevelVector = std::vector<mpz_class>;

/// One look-down step: g_j(X) = sign * [j in X] g_{j-1}(X \ {j}) + g_{j-1}(X).
/// Missing parents contribute zero: their masks lie outside the upper
/// closure of the support, where every level value vanishes.
template <class Parent>
LevelVector level_sweep(int n, Mask x, mpz_class g0, int sign,
                        Parent&& parent) {
  LevelVector g(static_cast<std::size_t>(n) + 1);
  g[0] = std::move(g0);
  for (int j = 1; j <= n; ++j) {
    g[j] = g[j - 1];
    if (mask_contains(x, j - 1)) {
      const LevelVector* below = parent(x & ~element_bit(j - 1));
      if (below) {
        if (sign > 0)
          g[j] += (*below)[j - 1];
        else
          g[j] -= (*below)[j - 1];
      }
    }
  }
  return g;
}

inline bool accept_all(Mask) { return true; }

}  // namespace detail

struct TransformResult {
  SparseTable table;
  std::uint64_t visited = 0;  // lattice points evaluated = |upper closure|
};

namespace detail {

inline TransformResult trimmed_signed_transform(const SparseTable& f, int sign,
                                                PopOrder order) {
  const int n = f.universe_size();
  TransformResult result{SparseTable(n), 0};
  auto make = [&](Mask x, auto&& parent) {
    return level_sweep(n, x, f.value(x), sign, parent);
  };
  auto visit = [&](Mask x, const LevelVector& g) {
    if (g[static_cast<std::size_t>(n)] != 0)
      result.table.set(x, g[static_cast<std::size_t>(n)]);
  };
  result.visited =
      run_pointwise<LevelVector>(n, f.support(), accept_all, order, make, visit)
          .visited;
  return result;
}

}  // namespace detail

/// (f zeta)(X) = sum of f over subsets of X, for every X in the upper
/// closure of supp(f). Only nonzero results are stored; visited counts the
/// closure points evaluated.
inline TransformResult trimmed_zeta(const SparseTable& f,
                                    PopOrder order = PopOrder::Ascending) {
  return detail::trimmed_signed_transform(f, +1, order);
}

/// (f mu)(X) = sum over Y subset of X of (-1)^|X \ Y| f(Y); inverse of the
/// zeta transform. Values may be negative.
inline TransformResult trimmed_moebius(const SparseTable& f,
                                       PopOrder order = PopOrder::Ascending) {
  return detail::trimmed_signed_transform(f, -1, order);
}

struct RankedTransformResult {
  int universe_size = 0;
  /// For each visited mask X, the vector indexed by s of
  /// sum over subsets Y of X with |Y| = s of f(Y).
  std::map<Mask, std::vector<mpz_class>> vectors;
  std::uint64_t visited = 0;
};

namespace detail {

/// Per-mask (n+1) x (n+1) table of level values, one row per level j,
/// one column per source rank s.
struct RankedLevels {
  int n = 0;
  std::vector<mpz_class> cells;  // row j, column s at j * (n + 1) + s

  mpz_class& at(int j, int s) { return cells[static_cast<std::size_t>(j) * (n + 1) + s]; }
  const mpz_class& at(int j, int s) const {
    return cells[static_cast<std::size_t>(j) * (n + 1) + s];
  }
};

/// Ranked look-down sweep; rows carry the same recursion as level_sweep,
/// one independent column per source rank s. Row 0 is the given seed.
template <class Parent>
RankedLevels ranked_level_sweep(int n, Mask x,
                                const std::vector<mpz_class>& seed_row,
                                int sign, Parent&& parent) {
  RankedLevels g;
  g.n = n;
  g.cells.assign(static_cast<std::size_t>(n + 1) * (n + 1), mpz_class(0));
  for (int s = 0; s <= n; ++s) g.at(0, s) = seed_row[s];
  for (int j = 1; j <= n; ++j) {
    const RankedLevels* below =
        mask_contains(x, j - 1) ? parent(x & ~element_bit(j - 1)) : nullptr;
    for (int s = 0; s <= n; ++s) {
      g.at(j, s) = g.at(j - 1, s);
      if (below) {
        if (sign > 0)
          g.at(j, s) += below->at(j - 1, s);
        else
          g.at(j, s) -= below->at(j - 1, s);
      }
    }
  }
  return g;
}

}  // namespace detail

/// Ranked zeta transform: all per-rank subset sums at once, over the upper
/// closure of supp(f). Every visited mask gets a vector (possibly all zero
/// for signed inputs that cancel).
inline RankedTransformResult trimmed_ranked_zeta(
    const SparseTable& f, PopOrder order = PopOrder::Ascending) {
  const int n = f.universe_size();
  RankedTransformResult result;
  result.universe_size = n;
  auto make = [&](Mask x, auto&& parent) {
    std::vector<mpz_class> seed(static_cast<std::size_t>(n) + 1);
    seed[mask_rank(x)] = f.value(x);
    return detail::ranked_level_sweep(n, x, seed, +1, parent);
  };
  auto visit = [&](Mask x, const detail::RankedLevels& g) {
    std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) row[s] = g.at(n, s);
    result.vectors.emplace(x, std::move(row));
  };
  result.visited = detail::run_pointwise<detail::RankedLevels>(
                       n, f.support(), detail::accept_all, order, make, visit)
                       .visited;
  return result;
}

}  // namespace trimlat
