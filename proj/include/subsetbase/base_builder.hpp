#pragma once

// End-to-end construction of certified minimum bases. The pipeline for the
// symmetric action: find the minimal witness (l, k), assemble the
// l-vertex hypergraph (every edge of size below k, then a nearly-regular
// layer of k-edges, then deletions down to n edges), dualize with the
// simplicial relabeling, and finally pad each set up to size r when a
// uniform family is requested. The alternating construction reuses the
// symmetric one on a ground set one smaller.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subsetbase/core.hpp"
#include "subsetbase/exact.hpp"
#include "subsetbase/family.hpp"
#include "subsetbase/hypergraph.hpp"
#include "subsetbase/verify.hpp"

namespace subsetbase {

/// Assembles an irrepeating hypergraph with w.l vertices, n edges and max
/// degree at most r from a valid witness: all edges of size < k (empty edge
/// first, then by size, then lexicographic), followed by floor(m) edges of
/// size k from the nearly-regular construction, with surplus edges deleted
/// last-appended-first until exactly n remain. Deletion usually stops
/// inside the k-layer; for some witnesses (minimal l whose sub-k layer
/// alone exceeds n, e.g. n = 10, r = 5 with l = 4, k = 3) it continues
/// into the (k-1)-layer, which keeps every needed invariant because the
/// singleton layer is never reached (n >= l + 1 for every reachable
/// witness) and degrees only drop. Irrepeatingness is re-checked after
/// every single deletion.
inline Hypergraph build_lnr_hypergraph(std::int64_t n, std::int64_t r,
                                       const Witness& w) {
  if (!witness_valid(w.l, w.k, n, r))
    throw std::domain_error("build_lnr_hypergraph: witness is not valid for (n, r)");
  const std::int64_t l = w.l;
  const std::int64_t k = w.k;
  if (small_edge_count(l, k) > detail::kMaxEnumeratedEdges)
    throw std::domain_error("build_lnr_hypergraph: parameters exceed construction limits");

  std::vector<std::vector<int>> edges;
  for (std::int64_t size = 0; size < k; ++size) {
    auto layer = k_subsets_lex(static_cast<int>(l), static_cast<int>(size));
    edges.insert(edges.end(), layer.begin(), layer.end());
  }

  const BigInt uniform_edges = floor_rational(m_value(l, k, r));
  const Hypergraph h2 =
      nearly_regular_uniform(l, k, static_cast<std::int64_t>(uniform_edges));

  // The uniform layer must fit in the degree headroom the small edges leave.
  BigInt small_degree = 0;
  for (std::int64_t i = 1; i < k; ++i) small_degree += binomial(l - 1, i - 1);
  if (BigInt(h2.max_degree()) > BigInt(r) - small_degree)
    throw internal_error("build_lnr_hypergraph: uniform layer exceeds degree headroom");

  edges.insert(edges.end(), h2.edges().begin(), h2.edges().end());

  const std::int64_t surplus = static_cast<std::int64_t>(edges.size()) - n;
  if (surplus < 0)
    throw internal_error("build_lnr_hypergraph: edge budget fell short of n");
  for (std::int64_t d = 0; d < surplus; ++d) {
    edges.pop_back();
    if (!is_irrepeating(Hypergraph(static_cast<int>(l), edges)))
      throw internal_error("build_lnr_hypergraph: deletion broke irrepeatingness");
  }

  Hypergraph result(static_cast<int>(l), std::move(edges));
  if (!is_lnr(result, l, n, r))
    throw internal_error("build_lnr_hypergraph: result failed the (l, n, r) check");
  return result;
}

/// The dual of h with dual vertices relabeled 1..n by the simplicial order
/// of the corresponding h-edges (size ascending, ties lexicographic). The
/// dual's edges, one per h-vertex in label order, form the family.
inline BaseFamily hypergraph_to_base(const Hypergraph& h) {
  if (!is_irrepeating(h))
    throw std::domain_error("hypergraph_to_base: hypergraph must be irrepeating");
  const auto n = static_cast<std::int64_t>(h.edge_count());
  std::vector<std::size_t> order(h.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = h.edges()[a];
    const auto& eb = h.edges()[b];
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    return ea < eb;
  });
  std::vector<int> label(h.edge_count());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    label[order[rank]] = static_cast<int>(rank + 1);

  BaseFamily family;
  family.n = n;
  family.sets.reserve(static_cast<std::size_t>(h.vertex_count()));
  for (int u = 1; u <= h.vertex_count(); ++u) {
    std::vector<int> set;
    for (int j : h.neighborhood(u))
      set.push_back(label[static_cast<std::size_t>(j - 1)]);
    std::sort(set.begin(), set.end());
    family.sets.push_back(std::move(set));
  }
  return family;
}

namespace detail {

struct LiftSearch {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::vector<std::vector<int>> base_sets;  // original, by family index
  std::vector<std::size_t> order;           // processing order
  std::vector<std::vector<int>> chosen;     // by family index
  std::set<std::vector<int>> completed;     // distinctness along the path

  bool dfs(std::size_t pos, const std::vector<std::vector<int>>& blocks) {
    if (pos == order.size()) return true;
    const std::size_t idx = order[pos];
    const auto& base = base_sets[idx];
    const std::int64_t deficit =
        r - static_cast<std::int64_t>(base.size());
    std::vector<int> candidates;
    for (int x = 1; x <= static_cast<int>(n); ++x)
      if (!std::binary_search(base.begin(), base.end(), x))
        candidates.push_back(x);

    // Prefer padding points whose block gains a split from joining the set
    // and avoid points whose block would collapse onto it; ties go to the
    // smallest label.
    std::vector<int> block_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (int x : blocks[bi]) block_of[static_cast<std::size_t>(x)] =
          static_cast<int>(bi);
    auto score = [&](int x) {
      const auto& block = blocks[static_cast<std::size_t>(
          block_of[static_cast<std::size_t>(x)])];
      int inside = 0;
      for (int y : block)
        if (std::binary_search(base.begin(), base.end(), y)) ++inside;
      const int outside = static_cast<int>(block.size()) - inside;
      if (inside == 0) return outside >= 2 ? 1 : 0;
      return outside == 1 ? -1 : 0;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return score(a) > score(b); });

    std::vector<int> padding;
    return choose_padding(pos, idx, deficit, 0, candidates, padding, blocks);
  }

  bool choose_padding(std::size_t pos, std::size_t idx, std::int64_t deficit,
                      std::size_t from, const std::vector<int>& candidates,
                      std::vector<int>& padding,
                      const std::vector<std::vector<int>>& blocks) {
    if (static_cast<std::int64_t>(padding.size()) == deficit) {
      std::vector<int> full = base_sets[idx];
      full.insert(full.end(), padding.begin(), padding.end());
      std::sort(full.begin(), full.end());
      if (completed.count(full)) return false;  // duplicate set
      const auto refined = refine_partition(blocks, full);
      const auto cuts_left =
          static_cast<std::int64_t>(order.size() - pos - 1);
      if (separation_excess(refined, cuts_left) > 0) return false;
      completed.insert(full);
      chosen[idx] = full;
      if (dfs(pos + 1, refined)) return true;
      completed.erase(full);
      return false;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (static_cast<std::int64_t>(candidates.size() - i) <
          deficit - static_cast<std::int64_t>(padding.size()))
        break;
      padding.push_back(candidates[i]);
      if (choose_padding(pos, idx, deficit, i + 1, candidates, padding, blocks))
        return true;
      padding.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Pads every set of a verified base for the at-most-r action up to size
/// exactly r, keeping the family a base and all sets distinct. Cardinality
/// is preserved; the search backtracks over all padding choices and throws
/// lift_exhausted_error only when no padding-only lift exists.
inline BaseFamily lift_to_uniform(const BaseFamily& b, std::int64_t n,
                                  std::int64_t r) {
  if (b.n != n)
    throw std::domain_error("lift_to_uniform: family ground set mismatch");
  if (n < 2 * r) throw std::domain_error("lift_to_uniform: requires n >= 2r");
  ActionSpec at_most{Group::symmetric, n, r, false};
  if (!is_base(b, at_most))
    throw std::domain_error("lift_to_uniform: input is not a base for the at-most action");
  if (std::all_of(b.sets.begin(), b.sets.end(), [&](const auto& s) {
        return static_cast<std::int64_t>(s.size()) == r;
      }))
    return b;

  detail::LiftSearch search;
  search.n = n;
  search.r = r;
  search.base_sets = b.sets;
  search.chosen.assign(b.sets.size(), {});
  search.order.resize(b.sets.size());
  std::iota(search.order.begin(), search.order.end(), std::size_t{0});
  // Fixed-content sets refine the partition for free; branch on the padded
  // ones afterwards, smallest deficit first.
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t a, std::size_t c) {
                     return b.sets[a].size() > b.sets[c].size();
                   });

  std::vector<int> everything(static_cast<std::size_t>(n));
  std::iota(everything.begin(), everything.end(), 1);
  if (!search.dfs(0, {everything}))
    throw lift_exhausted_error(
        "lift_to_uniform: no padding-only lift exists for this family");

  BaseFamily lifted;
  lifted.n = n;
  lifted.sets = std::move(search.chosen);
  ActionSpec uniform{Group::symmetric, n, r, true};
  if (!is_base(lifted, uniform))
    throw internal_error("lift_to_uniform: lifted family failed verification");
  return lifted;
}

/// Builds a verified minimum base for the requested action. Symmetric,
/// uniform: witness search, hypergraph assembly, dualization, uniform lift.
/// Symmetric, at-most: the same pipeline without the lift. Alternating:
/// the symmetric construction on n-1 points, reinterpreted on 1..n with
/// point n in no set.
inline BaseFamily construct_base(const ActionSpec& spec) {
  validate(spec);
  if (spec.group == Group::alternating) {
    ActionSpec inner{Group::symmetric, spec.n - 1, spec.r, spec.uniform};
    BaseFamily family = construct_base(inner);
    family.n = spec.n;
    if (!is_base(family, spec))
      throw internal_error("construct_base: alternating family failed verification");
    return family;
  }
  const Witness w = find_min_l(spec.n, spec.r);
  const Hypergraph h = build_lnr_hypergraph(spec.n, spec.r, w);
  BaseFamily family = hypergraph_to_base(h);
  if (spec.uniform) family = lift_to_uniform(family, spec.n, spec.r);
  if (!is_base(family, spec))
    throw internal_error("construct_base: family failed verification");
  if (static_cast<std::int64_t>(family.sets.size()) != w.l)
    throw internal_error("construct_base: family size differs from the base size");
  return family;
}

}  // namespace subsetbase
