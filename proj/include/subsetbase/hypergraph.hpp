#pragma once

// Irrepeating hypergraphs: the combinatorial object behind every base
// construction in this library. A hypergraph here is a labeled vertex set
// {1..l} plus an ordered sequence of edges (vertex subsets; the empty edge
// is allowed, and edge order matters because it drives the simplicial
// labeling downstream). A hypergraph is irrepeating when all edges are
// pairwise distinct and all vertices have pairwise distinct neighborhoods.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subsetbase/exact.hpp"

namespace subsetbase {

class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<std::vector<int>> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1)
      throw std::domain_error("hypergraph: vertex count must be positive");
    for (auto& edge : edges_) {
      std::sort(edge.begin(), edge.end());
      if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
        throw std::domain_error("hypergraph: repeated vertex within an edge");
      if (!edge.empty() && (edge.front() < 1 || edge.back() > vertex_count_))
        throw std::domain_error("hypergraph: vertex label out of range");
    }
    neighborhoods_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (std::size_t j = 0; j < edges_.size(); ++j)
      for (int v : edges_[j])
        neighborhoods_[static_cast<std::size_t>(v - 1)].push_back(
            static_cast<int>(j + 1));
  }

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted 1-based indices of the edges containing v.
  const std::vector<int>& neighborhood(int v) const {
    if (v < 1 || v > vertex_count_)
      throw std::domain_error("neighborhood: vertex label out of range");
    return neighborhoods_[static_cast<std::size_t>(v - 1)];
  }

  int degree(int v) const {
    return static_cast<int>(neighborhood(v).size());
  }

  int max_degree() const {
    int best = 0;
    for (const auto& nb : neighborhoods_)
      best = std::max(best, static_cast<int>(nb.size()));
    return best;
  }

 private:
  int vertex_count_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> neighborhoods_;  // per vertex, built eagerly
};

inline bool is_irrepeating(const Hypergraph& h) {
  std::vector<std::vector<int>> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    return false;
  std::vector<std::vector<int>> nbs;
  nbs.reserve(static_cast<std::size_t>(h.vertex_count()));
  for (int v = 1; v <= h.vertex_count(); ++v) nbs.push_back(h.neighborhood(v));
  std::sort(nbs.begin(), nbs.end());
  return std::adjacent_find(nbs.begin(), nbs.end()) == nbs.end();
}

/// Reverse-incidence dual: vertex i of the dual corresponds to edge i of h,
/// and the dual has one edge per vertex u of h, emitted in vertex-label
/// order, containing exactly the indices of the h-edges through u. Applied
/// twice this reproduces the input verbatim.
inline Hypergraph dual(const Hypergraph& h) {
  if (!is_irrepeating(h))
    throw std::domain_error("dual: hypergraph must be irrepeating");
  if (h.edge_count() == 0)
    throw std::domain_error("dual: hypergraph has no edges");
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(h.vertex_count()));
  for (int u = 1; u <= h.vertex_count(); ++u) out.push_back(h.neighborhood(u));
  return Hypergraph(static_cast<int>(h.edge_count()), std::move(out));
}

/// True iff h is irrepeating with l vertices, n edges, and max degree <= r.
inline bool is_lnr(const Hypergraph& h, std::int64_t l, std::int64_t n,
                   std::int64_t r) {
  return h.vertex_count() == l &&
         static_cast<std::int64_t>(h.edge_count()) == n &&
         h.max_degree() <= r && is_irrepeating(h);
}

/// All k-subsets of {1..l} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets_lex(int l, int k) {
  std::vector<std::vector<int>> out;
  if (k > l || k < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == l - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace detail {

// How many candidate edges the uniform constructors are willing to
// materialize. Keeps the desk-scale tools from silently attempting
// astronomically large enumerations.
constexpr std::int64_t kMaxEnumeratedEdges = 4'000'000;

}  // namespace detail

/// A k-uniform hypergraph on l vertices with s pairwise-distinct edges,
/// maximum degree exactly ceil(k*s/l) for s >= 1, and minimum degree at
/// least one below that. Deterministic. Two phases: a greedy pass that
/// always extends the lowest-degree vertices (ties to the lexicographically
/// largest subset) under the target cap, then exchange swaps that move one
/// incidence from a maximum-degree vertex to a minimum-degree vertex. While
/// the spread is at least two such a swap always exists, and every swap
/// strictly decreases the sum of squared degrees, so the second phase
/// terminates with the spread at most one.
inline Hypergraph nearly_regular_uniform(std::int64_t l, std::int64_t k,
                                         std::int64_t s) {
  if (l < 1) throw std::domain_error("nearly_regular_uniform: l must be positive");
  if (k < 1 || k > l)
    throw std::domain_error("nearly_regular_uniform: requires 1 <= k <= l");
  if (s < 0 || BigInt(s) > binomial(l, k))
    throw std::domain_error("nearly_regular_uniform: requires 0 <= s <= C(l,k)");
  if (s == 0) return Hypergraph(static_cast<int>(l), {});
  if (binomial(l, k) > detail::kMaxEnumeratedEdges)
    throw std::domain_error(
        "nearly_regular_uniform: C(l,k) exceeds the construction limit");

  const auto cands = k_subsets_lex(static_cast<int>(l), static_cast<int>(k));
  const int cap = static_cast<int>(ceil_div(k * s, l));
  std::vector<char> used(cands.size(), 0);
  std::vector<int> degrees(static_cast<std::size_t>(l), 0);
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(s));

  auto candidate_total = [&](std::size_t i) {
    int total = 0;
    for (int v : cands[i]) total += degrees[static_cast<std::size_t>(v - 1)];
    return total;
  };
  auto candidate_peak = [&](std::size_t i) {
    int peak = 0;
    for (int v : cands[i])
      peak = std::max(peak, degrees[static_cast<std::size_t>(v - 1)] + 1);
    return peak;
  };

  while (static_cast<std::int64_t>(edges.size()) < s) {
    // Preferred: stay under the cap, lowest degree total first, then the
    // lexicographically largest subset (scan order is lex ascending, so a
    // tie on the total is resolved by taking the later candidate).
    std::size_t best = cands.size();
    int best_total = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (used[i] || candidate_peak(i) > cap) continue;
      const int total = candidate_total(i);
      if (best == cands.size() || total <= best_total) {
        best = i;
        best_total = total;
      }
    }
    if (best == cands.size()) {
      // Nothing fits under the cap; take the gentlest overshoot and let the
      // exchange phase repair the spread.
      int best_peak = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (used[i]) continue;
        const int peak = candidate_peak(i);
        const int total = candidate_total(i);
        if (best == cands.size() || peak < best_peak ||
            (peak == best_peak && total <= best_total)) {
          best = i;
          best_peak = peak;
          best_total = total;
        }
      }
    }
    used[best] = 1;
    for (int v : cands[best]) ++degrees[static_cast<std::size_t>(v - 1)];
    edges.push_back(cands[best]);
  }

  std::set<std::vector<int>> in_use(edges.begin(), edges.end());
  for (std::int64_t swaps = 0;; ++swaps) {
    if (swaps > 100'000'000)
      throw internal_error("nearly_regular_uniform: balancing did not settle");
    int u = 1;
    int v = 1;
    for (int x = 1; x <= l; ++x) {
      if (degrees[static_cast<std::size_t>(x - 1)] >
          degrees[static_cast<std::size_t>(u - 1)])
        u = x;
      if (degrees[static_cast<std::size_t>(x - 1)] <
          degrees[static_cast<std::size_t>(v - 1)])
        v = x;
    }
    if (degrees[static_cast<std::size_t>(u - 1)] -
            degrees[static_cast<std::size_t>(v - 1)] <=
        1)
      break;
    bool swapped = false;
    for (auto& e : edges) {
      if (!std::binary_search(e.begin(), e.end(), u) ||
          std::binary_search(e.begin(), e.end(), v))
        continue;
      std::vector<int> replacement;
      replacement.reserve(e.size());
      for (int x : e)
        if (x != u) replacement.push_back(x);
      replacement.push_back(v);
      std::sort(replacement.begin(), replacement.end());
      if (in_use.count(replacement)) continue;
      in_use.erase(e);
      in_use.insert(replacement);
      e = std::move(replacement);
      --degrees[static_cast<std::size_t>(u - 1)];
      ++degrees[static_cast<std::size_t>(v - 1)];
      swapped = true;
      break;
    }
    if (!swapped)
      throw internal_error("nearly_regular_uniform: no exchange available");
  }

  Hypergraph result(static_cast<int>(l), std::move(edges));
  if (result.max_degree() != cap)
    throw internal_error("nearly_regular_uniform: peak degree missed the target");
  return result;
}

namespace detail {

struct IsoSearch {
  const Hypergraph* h1 = nullptr;
  const Hypergraph* h2 = nullptr;
  std::vector<int> image;          // h1 vertex -> h2 vertex (0 = unmapped)
  std::vector<char> taken;         // h2 vertex used
  std::vector<int> pending;        // per h1 edge: members not yet mapped
  std::vector<std::vector<int>> partial_images;  // per h1 edge
  std::map<std::vector<int>, int> available;     // h2 edge multiset

  bool consume(const std::vector<int>& edge) {
    auto it = available.find(edge);
    if (it == available.end() || it->second == 0) return false;
    --it->second;
    return true;
  }

  void restore(const std::vector<int>& edge) { ++available[edge]; }

  bool dfs(int u) {
    const int l = h1->vertex_count();
    if (u > l) return true;
    for (int v = 1; v <= l; ++v) {
      if (taken[static_cast<std::size_t>(v - 1)]) continue;
      if (h1->degree(u) != h2->degree(v)) continue;
      image[static_cast<std::size_t>(u - 1)] = v;
      taken[static_cast<std::size_t>(v - 1)] = 1;
      std::vector<std::size_t> completed;
      bool ok = true;
      for (int j : h1->neighborhood(u)) {
        const std::size_t idx = static_cast<std::size_t>(j - 1);
        partial_images[idx].push_back(v);
        if (--pending[idx] == 0) {
          std::vector<int> sorted_image = partial_images[idx];
          std::sort(sorted_image.begin(), sorted_image.end());
          if (!consume(sorted_image)) {
            ok = false;
            // Roll the decrement for this edge back below with the rest.
          } else {
            completed.push_back(idx);
          }
          if (!ok) break;
        }
      }
      if (ok && dfs(u + 1)) return true;
      for (std::size_t idx : completed) {
        std::vector<int> sorted_image = partial_images[idx];
        std::sort(sorted_image.begin(), sorted_image.end());
        restore(sorted_image);
      }
      for (int j : h1->neighborhood(u)) {
        const std::size_t idx = static_cast<std::size_t>(j - 1);
        if (!partial_images[idx].empty() && partial_images[idx].back() == v) {
          partial_images[idx].pop_back();
          ++pending[idx];
        }
      }
      taken[static_cast<std::size_t>(v - 1)] = 0;
      image[static_cast<std::size_t>(u - 1)] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// True iff some vertex bijection maps the edge multiset of h1 onto that of
/// h2 (edge order ignored). Backtracking with degree pruning; intended for
/// small hypergraphs, guarded by max_vertices.
inline bool are_isomorphic(const Hypergraph& h1, const Hypergraph& h2,
                           int max_vertices = 12) {
  if (h1.vertex_count() != h2.vertex_count()) return false;
  if (h1.edge_count() != h2.edge_count()) return false;
  if (h1.vertex_count() > max_vertices)
    throw std::domain_error("are_isomorphic: vertex count exceeds the guard");

  auto sorted_edges = [](const Hypergraph& h) {
    std::vector<std::vector<int>> e = h.edges();
    std::sort(e.begin(), e.end());
    return e;
  };
  const auto e1 = sorted_edges(h1);
  const auto e2 = sorted_edges(h2);
  if (e1 == e2) return true;  // identical up to edge order

  auto size_multiset = [](const std::vector<std::vector<int>>& edges) {
    std::vector<std::size_t> sizes;
    sizes.reserve(edges.size());
    for (const auto& e : edges) sizes.push_back(e.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (size_multiset(e1) != size_multiset(e2)) return false;

  auto degree_multiset = [](const Hypergraph& h) {
    std::vector<int> degs;
    for (int v = 1; v <= h.vertex_count(); ++v) degs.push_back(h.degree(v));
    std::sort(degs.begin(), degs.end());
    return degs;
  };
  if (degree_multiset(h1) != degree_multiset(h2)) return false;

  detail::IsoSearch search;
  search.h1 = &h1;
  search.h2 = &h2;
  search.image.assign(static_cast<std::size_t>(h1.vertex_count()), 0);
  search.taken.assign(static_cast<std::size_t>(h1.vertex_count()), 0);
  search.pending.resize(h1.edge_count());
  search.partial_images.assign(h1.edge_count(), {});
  for (const auto& e : e2) ++search.available[e];
  // Empty edges pair off immediately.
  for (std::size_t j = 0; j < h1.edge_count(); ++j) {
    search.pending[j] = static_cast<int>(h1.edges()[j].size());
    if (search.pending[j] == 0 && !search.consume({})) return false;
  }
  return search.dfs(1);
}

/// A pseudo-random irrepeating hypergraph with l vertices, n edges, and max
/// degree at most r. Deterministic for a fixed seed: shuffles candidate
/// edges within each size class, greedily picks under the degree cap, then
/// repairs duplicate neighborhoods by local edge swaps, retrying from
/// scratch a bounded number of times.
inline Hypergraph random_irrepeating(std::int64_t l, std::int64_t n,
                                     std::int64_t r, std::uint64_t seed) {
  if (l < 1 || l > 20)
    throw std::domain_error("random_irrepeating: requires 1 <= l <= 20");
  if (r < 1) throw std::domain_error("random_irrepeating: r must be positive");
  if (n < 1 || n > (std::int64_t{1} << l))
    throw std::domain_error("random_irrepeating: requires 1 <= n <= 2^l");
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Candidate pool: subsets by ascending size, shuffled within each size.
    std::vector<std::vector<int>> pool;
    for (int size = 0; size <= l; ++size) {
      auto layer = k_subsets_lex(static_cast<int>(l), size);
      std::shuffle(layer.begin(), layer.end(), rng);
      pool.insert(pool.end(), layer.begin(), layer.end());
    }
    std::vector<std::vector<int>> picked;
    std::vector<int> degrees(static_cast<std::size_t>(l), 0);
    for (const auto& e : pool) {
      if (static_cast<std::int64_t>(picked.size()) == n) break;
      bool fits = true;
      for (int v : e)
        if (degrees[static_cast<std::size_t>(v - 1)] + 1 > r) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int v : e) ++degrees[static_cast<std::size_t>(v - 1)];
      picked.push_back(e);
    }
    if (static_cast<std::int64_t>(picked.size()) < n) continue;

    auto find_duplicate_pair = [&]() -> std::pair<int, int> {
      std::vector<std::vector<int>> nbs(static_cast<std::size_t>(l));
      for (std::size_t j = 0; j < picked.size(); ++j)
        for (int v : picked[j])
          nbs[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(j));
      for (int u = 1; u <= l; ++u)
        for (int v = u + 1; v <= l; ++v)
          if (nbs[static_cast<std::size_t>(u - 1)] ==
              nbs[static_cast<std::size_t>(v - 1)])
            return {u, v};
      return {0, 0};
    };

    auto contains = [&](const std::vector<int>& e) {
      return std::find(picked.begin(), picked.end(), e) != picked.end();
    };

    bool viable = true;
    for (int repair = 0; repair < 50; ++repair) {
      auto [u, v] = find_duplicate_pair();
      if (u == 0) break;
      bool fixed = false;
      // Duplicated neighborhoods mean every picked edge holds u and v
      // together; shrinking one such edge separates them.
      for (auto& e : picked) {
        if (std::find(e.begin(), e.end(), u) == e.end()) continue;
        for (int drop : {v, u}) {
          std::vector<int> shrunk;
          for (int x : e)
            if (x != drop) shrunk.push_back(x);
          if (!contains(shrunk)) {
            --degrees[static_cast<std::size_t>(drop - 1)];
            e = shrunk;
            fixed = true;
            break;
          }
        }
        if (fixed) break;
      }
      if (!fixed) {
        // Both isolated: swap a random edge for the singleton {u}.
        std::vector<int> singleton{u};
        if (!contains(singleton) &&
            degrees[static_cast<std::size_t>(u - 1)] < r) {
          std::uniform_int_distribution<std::size_t> pick(0, picked.size() - 1);
          std::size_t victim = pick(rng);
          for (int x : picked[victim]) --degrees[static_cast<std::size_t>(x - 1)];
          picked[victim] = singleton;
          ++degrees[static_cast<std::size_t>(u - 1)];
          fixed = true;
        }
      }
      if (!fixed) {
        viable = false;
        break;
      }
    }
    if (!viable) continue;

    std::shuffle(picked.begin(), picked.end(), rng);
    Hypergraph candidate(static_cast<int>(l), std::move(picked));
    if (is_lnr(candidate, l, n, r)) return candidate;
  }
  throw generator_exhausted_error(
      "random_irrepeating: retry budget exhausted; parameters too tight");
}

}  // namespace subsetbase
