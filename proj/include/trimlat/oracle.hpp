#pragma once

// Brute-force reference implementations for tests. These deliberately share
// no algorithmic code with the transform/counting/solver paths: direct
// double loops and exhaustive assignment search only, so a bug in the fast
// path cannot hide in the reference.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trimlat/bitlattice.hpp"
#include "trimlat/graphs.hpp"

namespace trimlat::oracle {

inline constexpr int kMaxBruteUniverse = 12;
inline constexpr std::uint64_t kMaxBruteTuples = 10'000'000;
inline constexpr int kMaxBruteChromatic = 9;
inline constexpr int kMaxBruteDomatic = 8;

inline std::vector<mpz_class> dense_from(const SparseTable& f) {
  if (f.universe_size() > kMaxBruteUniverse)
    throw std::invalid_argument("brute-force tables capped at n <= 12");
  std::vector<mpz_class> out(std::size_t{1} << f.universe_size());
  for (const auto& [k, v] : f.entries()) out[k] = v;
  return out;
}

/// Direct evaluation of the subset sums: for every X, sum f over Y subset
/// of X by explicit submask enumeration.
inline std::vector<mpz_class> brute_zeta(const std::vector<mpz_class>& f) {
  const std::size_t size = f.size();
  if (size == 0 || (size & (size - 1)) != 0 ||
      size > (std::size_t{1} << kMaxBruteUniverse))
    throw std::invalid_argument("brute_zeta wants a dense table, n <= 12");
  std::vector<mpz_class> out(size);
  for (Mask x = 0; x < size; ++x) {
    mpz_class sum = f[0];
    for (Mask y = x; y != 0; y = (y - 1) & x) sum += f[y];
    out[x] = sum;
  }
  return out;
}

/// Direct evaluation of the signed subset sums with sign (-1)^|X \ Y|.
inline std::vector<mpz_class> brute_moebius(const std::vector<mpz_class>& f) {
  const std::size_t size = f.size();
  if (size == 0 || (size & (size - 1)) != 0 ||
      size > (std::size_t{1} << kMaxBruteUniverse))
    throw std::invalid_argument("brute_moebius wants a dense table, n <= 12");
  std::vector<mpz_class> out(size);
  for (Mask x = 0; x < size; ++x) {
    mpz_class sum = 0;
    Mask y = x;
    while (true) {
      if ((mask_rank(x) - mask_rank(y)) % 2 == 0)
        sum += f[y];
      else
        sum -= f[y];
      if (y == 0) break;
      y = (y - 1) & x;
    }
    out[x] = sum;
  }
  return out;
}

struct BruteTupleTables {
  /// Indexed by mask X: counts of ordered k-tuples of family members
  /// inside X that cover X / are pairwise disjoint / both.
  std::vector<mpz_class> cover, packing, partition;
};

/// Enumerates all |F|^k ordered tuples and classifies each one.
inline BruteTupleTables brute_tuple_counts(const SetFamily& family,
                                           unsigned k) {
  const int n = family.universe_size();
  if (n > kMaxBruteUniverse)
    throw std::invalid_argument("brute_tuple_counts capped at n <= 12");
  const std::size_t m = family.size();
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < k; ++i) {
    tuples *= m;
    if (m != 0 && tuples > kMaxBruteTuples)
      throw std::invalid_argument("tuple enumeration budget exceeded");
  }

  const std::size_t size = std::size_t{1} << n;
  BruteTupleTables t{std::vector<mpz_class>(size), std::vector<mpz_class>(size),
                     std::vector<mpz_class>(size)};

  std::vector<mpz_class> disjoint_by_union(size);
  std::vector<std::size_t> pick(k, 0);
  bool done = (m == 0 && k > 0);
  while (!done) {
    Mask uni = 0;
    bool disjoint = true;
    for (unsigned i = 0; i < k; ++i) {
      Mask s = family.members()[pick[i]];
      if (uni & s) disjoint = false;
      uni |= s;
    }
    t.cover[uni] += 1;
    if (disjoint) {
      t.partition[uni] += 1;
      disjoint_by_union[uni] += 1;
    }
    // advance the odometer
    done = true;
    for (unsigned i = 0; i < k; ++i) {
      if (++pick[i] < m) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
  }

  // A disjoint tuple is packed inside every X containing its union.
  for (Mask x = 0; x < size; ++x) {
    mpz_class sum = disjoint_by_union[0];
    for (Mask y = x; y != 0; y = (y - 1) & x) sum += disjoint_by_union[y];
    t.packing[x] = sum;
  }
  return t;
}

namespace detail {

inline bool colouring_exists(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.has_edge(u, v) && colour[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colour[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
      colour[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool domatic_partition_exists(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  auto dead_end = [&](int assigned) {
    for (int u = 0; u < n; ++u) {
      std::uint32_t seen = 0;
      bool open = false;
      Mask closed = g.neighbours(u) | element_bit(u);
      for (Mask rest = closed; rest != 0; rest &= rest - 1) {
        int w = std::countr_zero(rest);
        if (w >= assigned)
          open = true;
        else
          seen |= std::uint32_t{1} << label[w];
      }
      if (!open && seen != (std::uint32_t{1} << k) - 1) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (k - used > n - v) return false;
    if (dead_end(v)) return false;
    if (v == n) return used == k;
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      label[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
    }
    label[v] = -1;
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

/// Smallest k admitting a proper k-colouring, by exhaustive search.
inline int brute_chromatic(const Graph& g) {
  if (g.vertex_count() > kMaxBruteChromatic)
    throw std::invalid_argument("brute_chromatic capped at n <= 9");
  for (int k = 1;; ++k)
    if (detail::colouring_exists(g, k)) return k;
}

/// Largest k for which the vertices split into k dominating classes, by
/// exhaustive assignment search.
inline int brute_domatic(const Graph& g) {
  if (g.vertex_count() > kMaxBruteDomatic)
    throw std::invalid_argument("brute_domatic capped at n <= 8");
  int best = 1;
  for (int k = 2; k <= g.min_degree() + 1; ++k) {
    if (!detail::domatic_partition_exists(g, k)) break;
    best = k;
  }
  return best;
}

}  // namespace trimlat::oracle
