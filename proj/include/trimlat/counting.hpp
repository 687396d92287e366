#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "trimlat/bitlattice.hpp"
#include "trimlat/transforms.hpp"

namespace trimlat {

enum class TupleKind { Cover, Partition, Packing };

/// Predicate consulted before a superset is pushed onto the frontier.
/// Rejected masks are never visited. Callers must make sure the predicate is
/// downward-compatible for their purpose: once a mask they still care about
/// is rejected, the values at its supersets are no longer exact.
struct FrontierFilter {
  std::function<bool(Mask)> accept;

  bool operator()(Mask x) const { return !accept || accept(x); }

  static FrontierFilter none() { return {}; }
  static FrontierFilter of(std::function<bool(Mask)> fn) {
    return {std::move(fn)};
  }
};

/// Counts of ordered k-tuples (S_1,...,S_k) of family members inside X:
/// cover demands union X, partition additionally pairwise disjointness,
/// packing disjointness only. Cover/partition tables store every visited
/// mask (zeros included); the packing table stores nonzeros only.
struct TupleCounts {
  TupleKind kind = TupleKind::Cover;
  unsigned k = 0;
  SparseTable table;
  std::uint64_t visited = 0;
};

namespace detail {

struct CoverState {
  LevelVector g;  // zeta levels of the family indicator
  LevelVector h;  // moebius levels of g_n^k
};

}  // namespace detail

/// c(X) for every X in the upper closure of the family that the filter lets
/// through: the moebius transform of the k-th pointwise power of the zeta
/// transform of the family indicator, evaluated pointwise bottom-up.
/// k = 0 degenerates to c(X) = [X is empty] over the visited masks.
inline TupleCounts cover_numbers(const SetFamily& family, unsigned k,
                                 const FrontierFilter& filter =
                                     FrontierFilter::none(),
                                 PopOrder order = PopOrder::Ascending) {
  const int n = family.universe_size();
  TupleCounts result{TupleKind::Cover, k, SparseTable(n), 0};

  auto make = [&](Mask x, auto&& parent) {
    detail::CoverState st;
    st.g = detail::level_sweep(n, x, mpz_class(family.contains(x) ? 1 : 0), +1,
                               [&](Mask p) -> const detail::LevelVector* {
                                 const detail::CoverState* ps = parent(p);
                                 return ps ? &ps->g : nullptr;
                               });
    mpz_class powered;
    mpz_pow_ui(powered.get_mpz_t(), st.g[static_cast<std::size_t>(n)].get_mpz_t(), k);
    st.h = detail::level_sweep(n, x, std::move(powered), -1,
                               [&](Mask p) -> const detail::LevelVector* {
                                 const detail::CoverState* ps = parent(p);
                                 return ps ? &ps->h : nullptr;
                               });
    return st;
  };
  auto visit = [&](Mask x, const detail::CoverState& st) {
    if (k == 0)
      result.table.set(x, mpz_class(x == 0 ? 1 : 0));
    else
      result.table.set(x, st.h[static_cast<std::size_t>(n)]);
  };
  result.visited =
      detail::run_pointwise<detail::CoverState>(n, family.members(), filter,
                                                order, make, visit)
          .visited;
  return result;
}

namespace detail {

struct PartitionState {
  RankedLevels g;  // ranked zeta levels of the family indicator
  RankedLevels h;  // ranked moebius levels of the assembled tuple counts
};

}  // namespace detail

/// d(X): tuples that both cover X and are pairwise disjoint. Per visited
/// mask: ranked zeta levels, then a small dynamic program convolving the
/// per-rank subset counts k times, then ranked moebius levels; the answer is
/// the slice at s = |X|, where disjointness and covering coincide with the
/// member sizes summing to |X|.
inline TupleCounts partition_numbers(const SetFamily& family, unsigned k,
                                     const FrontierFilter& filter =
                                         FrontierFilter::none(),
                                     PopOrder order = PopOrder::Ascending) {
  const int n = family.universe_size();
  TupleCounts result{TupleKind::Partition, k, SparseTable(n), 0};

  auto make = [&](Mask x, auto&& parent) {
    detail::PartitionState st;
    std::vector<mpz_class> indicator(static_cast<std::size_t>(n) + 1);
    if (family.contains(x)) indicator[mask_rank(x)] = 1;
    st.g = detail::ranked_level_sweep(
        n, x, indicator, +1,
        [&](Mask p) -> const detail::RankedLevels* {
          const detail::PartitionState* ps = parent(p);
          return ps ? &ps->g : nullptr;
        });

    // q(i, s): ordered i-tuples of members inside X with sizes summing to s.
    std::vector<mpz_class> q(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) q[s] = st.g.at(n, s);
    for (unsigned i = 2; i <= k; ++i) {
      std::vector<mpz_class> next(static_cast<std::size_t>(n) + 1);
      for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= s; ++t) next[s] += q[s - t] * st.g.at(n, t);
      q = std::move(next);
    }
    if (k == 0) {
      for (int s = 0; s <= n; ++s) q[s] = (s == 0) ? 1 : 0;
    }

    st.h = detail::ranked_level_sweep(
        n, x, q, -1,
        [&](Mask p) -> const detail::RankedLevels* {
          const detail::PartitionState* ps = parent(p);
          return ps ? &ps->h : nullptr;
        });
    return st;
  };
  auto visit = [&](Mask x, const detail::PartitionState& st) {
    if (k == 0)
      result.table.set(x, mpz_class(x == 0 ? 1 : 0));
    else
      result.table.set(x, st.h.at(n, mask_rank(x)));
  };
  result.visited =
      detail::run_pointwise<detail::PartitionState>(n, family.members(), filter,
                                                    order, make, visit)
          .visited;
  return result;
}

/// p(X): disjoint tuples with union contained in X; the zeta transform of
/// the partition table. Stored for the upper closure of supp(d), which
/// carries every nonzero of p.
inline TupleCounts packing_numbers(const SetFamily& family, unsigned k,
                                   PopOrder order = PopOrder::Ascending) {
  TupleCounts parts = partition_numbers(family, k, FrontierFilter::none(), order);
  SparseTable d_nonzero(parts.table.universe_size());
  for (const auto& [mask, value] : parts.table.entries())
    if (value != 0) d_nonzero.set(mask, value);
  TransformResult zeta = trimmed_zeta(d_nonzero, order);
  return TupleCounts{TupleKind::Packing, k, std::move(zeta.table),
                     zeta.visited};
}

}  // namespace trimlat
