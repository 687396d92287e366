#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "trimlat/bitlattice.hpp"
#include "trimlat/counting.hpp"
#include "trimlat/graphs.hpp"
#include "trimlat/solvers.hpp"

namespace trimlat {

/// Per-vertex base of the degree-sensitive size bounds; the bound for an
/// n-vertex instance is base^n.
///   Dom:        (2^(D+1) - 1)^(1/(D+1))      all dominating sets
///   DomTrimmed: (2^(D+1) - 2)^(1/(D+1))      complement-dominates trimming
///   Chrom:      (2^(D+1) - D - 1)^(1/(D+1))  upset of maximal bipartite sets
enum class BoundVariant { Dom, DomTrimmed, Chrom };

namespace detail {

inline int bound_subtract(int delta, BoundVariant variant) {
  switch (variant) {
    case BoundVariant::Dom:
      return 1;
    case BoundVariant::DomTrimmed:
      return 2;
    case BoundVariant::Chrom:
      return delta + 1;
  }
  return 1;
}

/// Exact check of measured <= (2^(delta+1) - subtract)^(n/(delta+1)) by
/// raising both sides to the (delta+1)-th power; no rounding anywhere.
struct PowerBoundCheck {
  mpz_class lhs;  // measured^(delta+1)
  mpz_class rhs;  // (2^(delta+1) - subtract)^n
  bool holds = false;
  bool tight = false;
};

inline PowerBoundCheck power_bound_check(const mpz_class& measured, int n,
                                         int delta, int subtract) {
  PowerBoundCheck check;
  mpz_class cell = (mpz_class(1) << (delta + 1)) - subtract;
  mpz_pow_ui(check.lhs.get_mpz_t(), measured.get_mpz_t(),
             static_cast<unsigned long>(delta) + 1);
  mpz_pow_ui(check.rhs.get_mpz_t(), cell.get_mpz_t(),
             static_cast<unsigned long>(n));
  check.holds = check.lhs <= check.rhs;
  check.tight = check.lhs == check.rhs;
  return check;
}

}  // namespace detail

inline double bound_base(int delta, BoundVariant variant) {
  if (delta < 1) throw std::invalid_argument("bound_base needs delta >= 1");
  double cell = std::ldexp(1.0, delta + 1) - detail::bound_subtract(delta, variant);
  return std::pow(cell, 1.0 / (delta + 1));
}

/// base^n, tolerating delta = 0 (where the formulas degenerate to 1^n or 0).
inline double bound_value(int n, int delta, BoundVariant variant) {
  if (delta < 0) throw std::invalid_argument("bound_value needs delta >= 0");
  double cell = std::ldexp(1.0, delta + 1) - detail::bound_subtract(delta, variant);
  return std::pow(cell, static_cast<double>(n) / (delta + 1));
}

/// A universe with subsets P_1..P_m claimed to cover every element at least
/// delta times.
struct CoverSystem {
  int universe_size = 0;
  std::vector<Mask> parts;
  int delta = 1;
};

struct ShearerReport {
  mpz_class lhs;  // |F|^delta
  mpz_class rhs;  // product of projection sizes
  bool holds = false;
};

/// |F|^delta <= prod over parts of |{F cap P : F in family}|. Rejects
/// systems whose actual coverage falls below the claimed delta.
inline ShearerReport shearer_check(const CoverSystem& system,
                                   const SetFamily& family) {
  const int n = system.universe_size;
  check_universe_size(n);
  if (family.universe_size() != n)
    throw std::invalid_argument("family and cover system universes differ");
  if (system.delta < 1)
    throw std::invalid_argument("coverage multiplicity must be >= 1");
  for (int u = 0; u < n; ++u) {
    int coverage = 0;
    for (Mask p : system.parts) coverage += mask_contains(p, u) ? 1 : 0;
    if (coverage < system.delta)
      throw std::invalid_argument("element covered fewer than delta times");
  }

  ShearerReport report;
  mpz_pow_ui(report.lhs.get_mpz_t(), mpz_class(family.size()).get_mpz_t(),
             static_cast<unsigned long>(system.delta));
  report.rhs = 1;
  for (Mask p : system.parts) {
    std::set<Mask> projection;
    for (Mask f : family.members()) projection.insert(f & p);
    report.rhs *= static_cast<unsigned long>(projection.size());
  }
  report.holds = report.lhs <= report.rhs;
  return report;
}

struct DominatingBoundReport {
  BigCount dominating_sets;
  double bound = 0.0;
  bool holds = false;
  bool tight = false;
};

/// |D| <= (2^(D+1) - 1)^(n/(D+1)), checked exactly against the exhaustive
/// dominating-set count.
inline DominatingBoundReport verify_dominating_bound(const Graph& g) {
  if (g.vertex_count() > 16)
    throw std::invalid_argument("verify_dominating_bound guarded to n <= 16");
  DominatingBoundReport report;
  report.dominating_sets = count_dominating_sets(g);
  const int delta = g.max_degree();
  detail::PowerBoundCheck check = detail::power_bound_check(
      report.dominating_sets, g.vertex_count(), delta, 1);
  report.bound = bound_value(g.vertex_count(), delta, BoundVariant::Dom);
  report.holds = check.holds;
  report.tight = check.tight;
  return report;
}

struct UpsetBoundReport {
  std::uint64_t maxbip_upset = 0;
  double chrom_bound = 0.0;
  bool chrom_holds = false;
  std::uint64_t filtered_visited = 0;
  double domatic_bound = 0.0;
  bool domatic_holds = false;
};

/// Measures the two trimmed search spaces against their closed forms:
/// |upset of the maximal bipartite sets| against the Chrom bound, and the
/// mask count visited by the complement-dominates partition run against the
/// DomTrimmed bound. The latter presumes minimum degree >= 1; with isolated
/// vertices the trimmed family argument is void and the report may say so.
inline UpsetBoundReport verify_upset_bounds(const Graph& g) {
  if (g.vertex_count() > 14)
    throw std::invalid_argument("verify_upset_bounds guarded to n <= 14");
  const int n = g.vertex_count();
  const int delta = g.max_degree();
  UpsetBoundReport report;

  SetFamily upset = upper_closure(enumerate_maximal_bipartite(g));
  report.maxbip_upset = upset.size();
  detail::PowerBoundCheck chrom = detail::power_bound_check(
      mpz_class(static_cast<unsigned long>(report.maxbip_upset)), n, delta,
      delta + 1);
  report.chrom_bound = bound_value(n, delta, BoundVariant::Chrom);
  report.chrom_holds = chrom.holds;

  TupleCounts filtered = partition_numbers(enumerate_minimal_dominating(g), 1,
                                           complement_dominates_filter(g));
  report.filtered_visited = filtered.visited;
  detail::PowerBoundCheck dom = detail::power_bound_check(
      mpz_class(static_cast<unsigned long>(report.filtered_visited)), n, delta,
      2);
  report.domatic_bound = bound_value(n, delta, BoundVariant::DomTrimmed);
  report.domatic_holds = dom.holds;
  return report;
}

}  // namespace trimlat
