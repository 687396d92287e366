#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace trimlat {

/// A subset of an n-element universe, one bit per element (bit j = element j).
using Mask = std::uint32_t;

/// Exact nonnegative tuple count; plain mpz_class so it composes with signed
/// intermediate values in the transforms.
using BigCount = mpz_class;

inline constexpr int kMaxUniverse = 32;

constexpr Mask element_bit(int j) { return Mask{1} << j; }

constexpr bool mask_contains(Mask x, int j) { return (x >> j) & 1u; }

/// Number of elements in the subset; the lattice level the mask lives on.
constexpr int mask_rank(Mask x) { return std::popcount(x); }

constexpr bool is_subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask universe_mask(int n) {
  return n == 0 ? Mask{0} : (~Mask{0} >> (kMaxUniverse - n));
}

inline void check_universe_size(int n) {
  if (n < 0 || n > kMaxUniverse)
    throw std::invalid_argument("universe size must be in [0, " +
                                std::to_string(kMaxUniverse) + "], got " +
                                std::to_string(n));
}

inline std::vector<int> mask_elements(Mask x) {
  std::vector<int> out;
  for (Mask rest = x; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

inline Mask mask_of(std::initializer_list<int> elements) {
  Mask x = 0;
  for (int e : elements) x |= element_bit(e);
  return x;
}

/// An explicit, duplicate-free collection of subsets over a shared universe.
/// Members are kept sorted ascending as integers so iteration order is
/// reproducible; construction deduplicates.
class SetFamily {
 public:
  explicit SetFamily(int universe_size, std::vector<Mask> members = {})
      : n_(universe_size), members_(std::move(members)) {
    check_universe_size(n_);
    for (Mask m : members_)
      if (!is_subset_of(m, universe_mask(n_)))
        throw std::invalid_argument("family member does not fit universe");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  int universe_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Mask>& members() const { return members_; }

  bool contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
  }

  bool operator==(const SetFamily& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  int n_;
  std::vector<Mask> members_;
};

/// Members of the family with no proper subset also in the family.
inline SetFamily minimal_members(const SetFamily& family) {
  std::vector<Mask> out;
  for (Mask a : family.members()) {
    bool minimal = true;
    for (Mask b : family.members())
      if (b != a && is_subset_of(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return SetFamily(family.universe_size(), std::move(out));
}

/// Members of the family with no proper superset also in the family.
inline SetFamily maximal_members(const SetFamily& family) {
  std::vector<Mask> out;
  for (Mask a : family.members()) {
    bool maximal = true;
    for (Mask b : family.members())
      if (b != a && is_subset_of(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return SetFamily(family.universe_size(), std::move(out));
}

/// Pop order within one rank bucket. Results of every lattice walk must be
/// independent of this; it exists so tests can prove that.
enum class PopOrder { Ascending, Descending };

/// Rank-bucketed worklist driving bottom-up pointwise evaluation.
///
/// Holds n+1 deduplicating buckets, one per rank. Pops drain the current
/// rank before advancing, so pops are globally nondecreasing in rank, and a
/// mask is handed out at most once per frontier lifetime.
class RankFrontier {
 public:
  explicit RankFrontier(int universe_size, PopOrder order = PopOrder::Ascending)
      : n_(universe_size), order_(order), buckets_(universe_size + 1) {
    check_universe_size(universe_size);
  }

  void push(Mask x) {
    if (!is_subset_of(x, universe_mask(n_)))
      throw std::invalid_argument("mask does not fit frontier universe");
    int r = mask_rank(x);
    if (r < rank_)
      throw std::invalid_argument("push below the frontier's current rank");
    buckets_[r].insert(x);
  }

  /// Removes and returns a mask from the lowest nonempty bucket at or above
  /// the current rank; empty optional once exhausted.
  std::optional<Mask> pop() {
    while (rank_ <= n_ && buckets_[rank_].empty()) ++rank_;
    if (rank_ > n_) return std::nullopt;
    auto& bucket = buckets_[rank_];
    auto it = order_ == PopOrder::Ascending ? bucket.begin()
                                            : std::prev(bucket.end());
    Mask x = *it;
    bucket.erase(it);
    return x;
  }

  int current_rank() const { return rank_; }

 private:
  int n_;
  PopOrder order_;
  int rank_ = 0;
  std::vector<std::set<Mask>> buckets_;
};

/// Upper closure: every superset (within the universe) of some family member.
/// Expands rank by rank from the members instead of scanning all 2^n masks.
inline SetFamily upper_closure(const SetFamily& family) {
  const int n = family.universe_size();
  RankFrontier frontier(n);
  for (Mask m : family.members()) frontier.push(m);
  std::vector<Mask> out;
  while (auto popped = frontier.pop()) {
    Mask x = *popped;
    out.push_back(x);
    for (Mask rest = universe_mask(n) & ~x; rest != 0; rest &= rest - 1)
      frontier.push(x | (rest & -rest));
  }
  return SetFamily(n, std::move(out));
}

/// A function on the subset lattice stored as mask -> value. Zero-valued
/// entries may be stored explicitly (the counting algorithms emit every
/// visited mask); support() is always the nonzero key set.
class SparseTable {
 public:
  explicit SparseTable(int universe_size) : n_(universe_size) {
    check_universe_size(n_);
  }

  int universe_size() const { return n_; }
  std::size_t size() const { return entries_.size(); }

  void set(Mask key, mpz_class value) {
    if (!is_subset_of(key, universe_mask(n_)))
      throw std::invalid_argument("table key does not fit universe");
    entries_[key] = std::move(value);
  }

  const mpz_class* find(Mask key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// Value at key, defaulting to zero off the stored set.
  mpz_class value(Mask key) const {
    const mpz_class* v = find(key);
    return v ? *v : mpz_class(0);
  }

  bool stores(Mask key) const { return entries_.count(key) != 0; }

  const std::map<Mask, mpz_class>& entries() const { return entries_; }

  std::vector<Mask> support() const {
    std::vector<Mask> out;
    for (const auto& [k, v] : entries_)
      if (v != 0) out.push_back(k);
    return out;
  }

  /// Equal as functions on the whole lattice (explicit zeros are immaterial).
  bool same_function(const SparseTable& other) const {
    if (n_ != other.n_) return false;
    for (const auto& [k, v] : entries_)
      if (v != other.value(k)) return false;
    for (const auto& [k, v] : other.entries_)
      if (v != value(k)) return false;
    return true;
  }

 private:
  int n_;
  std::map<Mask, mpz_class> entries_;
};

}  // namespace trimlat
