#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "trimlat/bitlattice.hpp"
#include "trimlat/counting.hpp"
#include "trimlat/graphs.hpp"

namespace trimlat {

struct SolverReport {
  bool answer = false;
  std::optional<Mask> witness;
  std::uint64_t visited = 0;
  std::size_t family_size = 0;
};

enum class DomaticPath { Auto, Unfiltered, Filtered };
enum class ChromaticMethod { MaximalIndependent, MaximalBipartite };

/// Accepts a mask only while its complement still dominates. Domination is
/// upward monotone, so acceptance is downward closed: exactly the shape the
/// frontier trimming needs.
inline FrontierFilter complement_dominates_filter(const Graph& g) {
  const Mask all = g.vertices();
  return FrontierFilter::of(
      [g, all](Mask x) { return is_dominating(g, all & ~x); });
}

namespace detail {

inline std::optional<Mask> first_nonzero(const SparseTable& table) {
  for (const auto& [mask, value] : table.entries())
    if (value != 0) return mask;
  return std::nullopt;
}

}  // namespace detail

/// Can k pairwise disjoint dominating sets be packed into G? Equivalently,
/// is the domatic number at least k.
///
/// Runs the partition counts over the minimal dominating sets. The filtered
/// route trims the frontier to masks whose complement dominates and asks for
/// k-1 parts: a nonzero d(X) then extends by the dominating complement to a
/// k-packing. The trim is only conclusive for k >= 3; k = 2 falls back to
/// the unfiltered run and k = 1 is true outright (the whole vertex set
/// dominates).
inline SolverReport domatic_packing_decision(const Graph& g, unsigned k,
                                             DomaticPath path =
                                                 DomaticPath::Auto) {
  if (k == 0) throw std::invalid_argument("packing size k must be >= 1");
  SolverReport report;
  if (k == 1) {
    report.answer = true;
    report.witness = g.vertices();
    return report;
  }
  SetFamily family = enumerate_minimal_dominating(g);
  report.family_size = family.size();

  const bool filtered = (path != DomaticPath::Unfiltered) && k >= 3;
  TupleCounts counts =
      filtered ? partition_numbers(family, k - 1, complement_dominates_filter(g))
               : partition_numbers(family, k, FrontierFilter::none());
  report.visited = counts.visited;
  report.witness = detail::first_nonzero(counts.table);
  report.answer = report.witness.has_value();
  return report;
}

/// Largest k for which V partitions into k dominating sets. Search is
/// ascending; min degree + 1 is the ceiling.
inline int domatic_number(const Graph& g, SolverReport* last = nullptr) {
  int best = 1;
  if (last) *last = SolverReport{true, g.vertices(), 0, 0};
  for (int k = 2; k <= g.min_degree() + 1; ++k) {
    SolverReport report = domatic_packing_decision(g, static_cast<unsigned>(k));
    if (!report.answer) break;
    best = k;
    if (last) *last = report;
  }
  return best;
}

/// Can V be covered by k independent sets? Covers by maximal independent
/// sets suffice, so this asks for a nonzero cover count at V over that
/// family.
inline SolverReport chromatic_decision_mis(const Graph& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("colour count k must be >= 1");
  SetFamily family = enumerate_maximal_independent(g);
  SolverReport report;
  report.family_size = family.size();
  TupleCounts counts = cover_numbers(family, k);
  report.visited = counts.visited;
  report.answer = counts.table.value(g.vertices()) != 0;
  if (report.answer) report.witness = g.vertices();
  return report;
}

/// Can V be covered by k independent sets, via maximal induced-bipartite
/// vertex sets: k/2 of them for even k; for odd k, (k-1)/2 of them covering
/// some X whose complement is independent. k = 1 is just edgelessness.
inline SolverReport chromatic_decision_bipartite(const Graph& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("colour count k must be >= 1");
  SolverReport report;
  if (k == 1) {
    report.answer = g.max_degree() == 0;
    if (report.answer) report.witness = g.vertices();
    return report;
  }
  SetFamily family = enumerate_maximal_bipartite(g);
  report.family_size = family.size();
  TupleCounts counts = cover_numbers(family, k / 2);
  report.visited = counts.visited;
  if (k % 2 == 0) {
    report.answer = counts.table.value(g.vertices()) != 0;
    if (report.answer) report.witness = g.vertices();
    return report;
  }
  for (const auto& [mask, value] : counts.table.entries()) {
    if (value != 0 && is_independent(g, g.vertices() & ~mask)) {
      report.answer = true;
      report.witness = mask;
      return report;
    }
  }
  return report;
}

/// Smallest k admitting a cover by k independent sets; max degree + 1 always
/// suffices.
inline int chromatic_number(const Graph& g, ChromaticMethod method,
                            SolverReport* last = nullptr) {
  for (int k = 1; k <= g.max_degree() + 1; ++k) {
    SolverReport report =
        method == ChromaticMethod::MaximalIndependent
            ? chromatic_decision_mis(g, static_cast<unsigned>(k))
            : chromatic_decision_bipartite(g, static_cast<unsigned>(k));
    if (report.answer) {
      if (last) *last = report;
      return k;
    }
  }
  throw std::logic_error("greedy ceiling failed; solver inconsistency");
}

/// Is the domatic number at least d, for even d, by splitting the work in
/// half: count d/2-part partitions over the dominating sets whose
/// complement can still host the other d/2 parts, then look for two
/// complementary nonzero outputs.
///
/// Frontier seeds are restricted by the same neighbourhood headroom rule as
/// the pushes. The dominating sets form an upward-closed family, so
/// unrestricted seeding would place every superset on the frontier up front
/// and the push-time trim would never fire; restricting the seeds keeps the
/// counts at surviving masks unchanged, because every dominating subset of a
/// surviving mask satisfies the headroom rule as well.
inline bool domatic_meet_in_middle(const Graph& g, unsigned d,
                                   SolverReport* report_out = nullptr,
                                   int guard = 16) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("meet-in-the-middle needs even d >= 2");
  if (g.vertex_count() > guard)
    throw std::invalid_argument("meet-in-the-middle guarded to n <= " +
                                std::to_string(guard));
  const int n = g.vertex_count();
  const unsigned half = d / 2;
  NeighbourhoodCover cover = closed_neighbourhoods(g);
  auto headroom = [&, half](Mask x) {
    for (int v = 0; v < n; ++v)
      if (static_cast<unsigned>(mask_rank(cover.sets[v] & ~x)) < half)
        return false;
    return true;
  };

  std::vector<Mask> seeds;
  const Mask top = universe_mask(n);
  for (Mask x = 0;; ++x) {
    if (is_dominating(g, x) && headroom(x)) seeds.push_back(x);
    if (x == top) break;
  }

  SetFamily family(n, std::move(seeds));
  TupleCounts counts =
      partition_numbers(family, half, FrontierFilter::of(headroom));

  SolverReport report;
  report.family_size = family.size();
  report.visited = counts.visited;
  std::unordered_set<Mask> positive;
  for (const auto& [mask, value] : counts.table.entries())
    if (value != 0) positive.insert(mask);
  for (Mask x : positive) {
    if (positive.count(top & ~x)) {
      report.answer = true;
      report.witness = x;
      break;
    }
  }
  if (report_out) *report_out = report;
  return report.answer;
}

}  // namespace trimlat
