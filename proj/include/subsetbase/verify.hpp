#pragma once

// Independent certification of base families. The partition criterion is
// the workhorse: two points lie in the same block exactly when every member
// set treats them identically, and the pointwise stabilizer of the family
// inside the full symmetric group is the direct product of the symmetric
// groups on the blocks. The permutation-enumeration oracle and the
// exhaustive minimum-base search exist to check everything else against
// ground truth at small n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "subsetbase/core.hpp"
#include "subsetbase/exact.hpp"
#include "subsetbase/family.hpp"
#include "subsetbase/hypergraph.hpp"

namespace subsetbase {

/// Thrown when a family's set sizes do not match the mode an operation
/// expects; distinct from an ordinary "not a base" verdict.
struct size_mode_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NeighborhoodPartition {
  std::vector<std::vector<int>> blocks;  // disjoint cover of 1..n
};

inline NeighborhoodPartition neighborhood_partition(const BaseFamily& b) {
  validate(b);
  const auto nbs = point_neighborhoods(b);
  std::map<std::vector<int>, std::vector<int>> groups;
  for (std::int64_t x = 1; x <= b.n; ++x)
    groups[nbs[static_cast<std::size_t>(x - 1)]].push_back(
        static_cast<int>(x));
  NeighborhoodPartition part;
  part.blocks.reserve(groups.size());
  for (auto& [nb, block] : groups) part.blocks.push_back(std::move(block));
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& c) { return a.front() < c.front(); });
  return part;
}

namespace detail {

// The partition criteria are meaningful for any n >= r >= 1, so the
// verification ops deliberately skip the 2r domain bound that the witness
// search and the constructions enforce.
inline void check_verifiable(const ActionSpec& spec) {
  if (spec.n < 1 || spec.r < 1)
    throw std::domain_error("action spec: n and r must be positive");
  if (spec.r > spec.n)
    throw std::domain_error("action spec: r cannot exceed n");
}

inline void check_size_mode(const BaseFamily& b, const ActionSpec& spec) {
  if (b.n != spec.n)
    throw size_mode_error("family ground set does not match the action");
  for (const auto& s : b.sets) {
    const auto size = static_cast<std::int64_t>(s.size());
    if (spec.uniform && size != spec.r)
      throw size_mode_error("family is not uniform of the requested size");
    if (!spec.uniform && size > spec.r)
      throw size_mode_error("family contains a set larger than r");
  }
}

inline bool sets_pairwise_distinct(const BaseFamily& b) {
  std::vector<std::vector<int>> copy = b.sets;
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
}

}  // namespace detail

/// Symmetric action: a base iff all sets are distinct and every block is a
/// singleton. Alternating action: a base iff all sets are distinct and at
/// most one block has size two with all others singletons (the only group
/// element such a partition leaves is a single transposition, which is odd).
inline bool is_base(const BaseFamily& b, const ActionSpec& spec) {
  detail::check_verifiable(spec);
  validate(b);
  detail::check_size_mode(b, spec);
  if (!detail::sets_pairwise_distinct(b)) return false;
  const auto part = neighborhood_partition(b);
  if (spec.group == Group::symmetric) {
    for (const auto& block : part.blocks)
      if (block.size() != 1) return false;
    return true;
  }
  int doubles = 0;
  for (const auto& block : part.blocks) {
    if (block.size() > 2) return false;
    if (block.size() == 2) ++doubles;
  }
  return doubles <= 1;
}

struct StabilizerCount {
  BigInt order;       // permutations fixing every member set
  BigInt even_count;  // how many of those are even
};

/// Counts permutations g of 1..n with S^g = S for every member set S, by
/// enumerating all n! permutations. Guard: n <= 10.
inline StabilizerCount stabilizer_order_bruteforce(const BaseFamily& b) {
  validate(b);
  if (b.n > 10)
    throw std::domain_error("stabilizer_order_bruteforce: n exceeds the guard");
  const int n = static_cast<int>(b.n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  StabilizerCount result{0, 0};
  std::vector<int> image;
  do {
    bool fixes_all = true;
    for (const auto& s : b.sets) {
      image.clear();
      for (int x : s) image.push_back(perm[static_cast<std::size_t>(x - 1)]);
      std::sort(image.begin(), image.end());
      if (image != s) {
        fixes_all = false;
        break;
      }
    }
    if (!fixes_all) continue;
    ++result.order;
    // Parity from the cycle decomposition.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int transpositions = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int len = 0;
      for (int x = start; !seen[static_cast<std::size_t>(x)];
           x = perm[static_cast<std::size_t>(x)] - 1) {
        seen[static_cast<std::size_t>(x)] = 1;
        ++len;
      }
      transpositions += len - 1;
    }
    if (transpositions % 2 == 0) ++result.even_count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

namespace detail {

inline std::vector<std::vector<int>> refine_partition(
    const std::vector<std::vector<int>>& blocks, const std::vector<int>& set) {
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size() * 2);
  std::vector<int> inside;
  std::vector<int> outside;
  for (const auto& block : blocks) {
    inside.clear();
    outside.clear();
    for (int x : block) {
      if (std::binary_search(set.begin(), set.end(), x))
        inside.push_back(x);
      else
        outside.push_back(x);
    }
    if (!inside.empty()) out.push_back(inside);
    if (!outside.empty()) out.push_back(outside);
  }
  return out;
}

// Minimum number of points that must remain merged with some other point
// after f more refining cuts: each block of size c contributes
// max(0, c - 2^f).
inline std::int64_t separation_excess(
    const std::vector<std::vector<int>>& blocks, std::int64_t cuts_left) {
  const std::int64_t capacity =
      cuts_left >= 62 ? std::int64_t{1} << 62 : std::int64_t{1} << cuts_left;
  std::int64_t excess = 0;
  for (const auto& block : blocks)
    excess += std::max<std::int64_t>(
        0, static_cast<std::int64_t>(block.size()) - capacity);
  return excess;
}

struct BruteForceSearch {
  const std::vector<std::vector<int>>* pool = nullptr;
  std::vector<int> first_set;
  std::int64_t family_size = 0;
  bool alternating = false;

  bool accepts(const std::vector<std::vector<int>>& blocks) const {
    if (!alternating) {
      for (const auto& b : blocks)
        if (b.size() != 1) return false;
      return true;
    }
    int doubles = 0;
    for (const auto& b : blocks) {
      if (b.size() > 2) return false;
      if (b.size() == 2) ++doubles;
    }
    return doubles <= 1;
  }

  bool dfs(std::int64_t chosen, std::size_t start,
           const std::vector<std::vector<int>>& blocks) const {
    const std::int64_t cuts_left = family_size - chosen;
    const std::int64_t allowed = alternating ? 1 : 0;
    if (separation_excess(blocks, cuts_left) > allowed) return false;
    if (chosen == family_size) return accepts(blocks);
    for (std::size_t i = start; i < pool->size(); ++i) {
      if (static_cast<std::int64_t>(pool->size() - i) <
          family_size - chosen)
        break;
      if ((*pool)[i] == first_set) continue;
      if (dfs(chosen + 1, i + 1, refine_partition(blocks, (*pool)[i])))
        return true;
    }
    return false;
  }
};

}  // namespace detail

/// Smallest l such that some l-element family of subsets (exactly r or <= r
/// per the spec's mode) is a base, found by exhaustive search. The first
/// set may be fixed to {1..s} up to relabeling, which is the only symmetry
/// reduction applied. Guards: n <= 9 and r <= 4.
inline std::int64_t brute_force_base_size(const ActionSpec& spec) {
  detail::check_verifiable(spec);
  if (spec.n > 9 || spec.r > 4)
    throw std::domain_error("brute_force_base_size: n <= 9 and r <= 4 required");
  const int n = static_cast<int>(spec.n);
  const int r = static_cast<int>(spec.r);

  std::vector<std::vector<int>> pool;
  if (spec.uniform) {
    pool = k_subsets_lex(n, r);
  } else {
    for (int size = 1; size <= r; ++size) {
      auto layer = k_subsets_lex(n, size);
      pool.insert(pool.end(), layer.begin(), layer.end());
    }
  }

  std::vector<std::vector<int>> first_candidates;
  if (spec.uniform) {
    std::vector<int> whole(static_cast<std::size_t>(r));
    std::iota(whole.begin(), whole.end(), 1);
    first_candidates.push_back(whole);
  } else {
    for (int size = 1; size <= r; ++size) {
      std::vector<int> prefix(static_cast<std::size_t>(size));
      std::iota(prefix.begin(), prefix.end(), 1);
      first_candidates.push_back(prefix);
    }
  }

  std::vector<int> everything(static_cast<std::size_t>(n));
  std::iota(everything.begin(), everything.end(), 1);

  for (std::int64_t l = 1; l <= static_cast<std::int64_t>(pool.size()); ++l) {
    for (const auto& first : first_candidates) {
      detail::BruteForceSearch search;
      search.pool = &pool;
      search.first_set = first;
      search.family_size = l;
      search.alternating = spec.group == Group::alternating;
      const auto blocks =
          detail::refine_partition({everything}, first);
      if (search.dfs(1, 0, blocks)) return l;
    }
  }
  throw internal_error("brute_force_base_size: no base found within the pool");
}

/// Handshake identity for uniform families: sum over points of the degree
/// equals |B| * r.
inline bool double_count_check(const BaseFamily& b, std::int64_t r) {
  validate(b);
  for (const auto& s : b.sets)
    if (static_cast<std::int64_t>(s.size()) != r)
      throw size_mode_error("double_count_check: family is not r-uniform");
  const auto nbs = point_neighborhoods(b);
  std::int64_t total = 0;
  for (const auto& nb : nbs) total += static_cast<std::int64_t>(nb.size());
  return total == static_cast<std::int64_t>(b.sets.size()) * r;
}

struct DegreeThresholdReport {
  std::vector<int> low_degree;   // points with fewer than k member sets
  std::vector<int> high_degree;  // points with at least k member sets
  bool uniform = false;          // bound fields only apply to uniform input
  Rational counting_bound;       // m_r(l, k) for the family's l and set size
  bool incidence_bound_met = true;  // sum of high degrees >= k * bound
};

/// Splits the points by degree threshold k and, for uniform families,
/// checks the counting inequality that every genuine base must satisfy:
/// the total degree on the high side is at least k * m_r(l, k).
inline DegreeThresholdReport degree_threshold_partition(const BaseFamily& b,
                                                        std::int64_t k) {
  validate(b);
  if (k < 1)
    throw std::domain_error("degree_threshold_partition: k must be positive");
  DegreeThresholdReport report;
  const auto nbs = point_neighborhoods(b);
  BigInt high_total = 0;
  for (std::int64_t x = 1; x <= b.n; ++x) {
    const auto deg =
        static_cast<std::int64_t>(nbs[static_cast<std::size_t>(x - 1)].size());
    if (deg < k) {
      report.low_degree.push_back(static_cast<int>(x));
    } else {
      report.high_degree.push_back(static_cast<int>(x));
      high_total += deg;
    }
  }
  const auto l = static_cast<std::int64_t>(b.sets.size());
  if (l >= 1) {
    const auto size0 = static_cast<std::int64_t>(b.sets.front().size());
    const bool uniform =
        size0 >= 1 &&
        std::all_of(b.sets.begin(), b.sets.end(), [&](const auto& s) {
          return static_cast<std::int64_t>(s.size()) == size0;
        });
    if (uniform) {
      report.uniform = true;
      report.counting_bound = m_value(l, k, size0);
      report.incidence_bound_met =
          Rational(high_total) >= Rational(k) * report.counting_bound;
    }
  }
  return report;
}

}  // namespace subsetbase
