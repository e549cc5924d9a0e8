#pragma once

// Slow, obviously-correct reference implementations used to cross-check
// the fast paths: generate every linear edge family on a few points, filter,
// and bucket by a brute-force canonical form over all vertex permutations.
// Practical up to about 6 vertices.

#include "greechie/enumerate.hpp"
#include "greechie/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace greechie::reference {

/// Lexicographically smallest sorted edge list over all relabelings.
inline std::vector<Edge> brute_canonical_edges(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{1});
  std::vector<Edge> best;
  do {
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
      Edge f;
      for (VertexId v : e) f.push_back(perm[v - 1]);
      std::sort(f.begin(), f.end());
      edges.push_back(std::move(f));
    }
    std::sort(edges.begin(), edges.end());
    if (best.empty() || edges < best) best = std::move(edges);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace detail {

inline void subsets_of_size(std::size_t n, std::size_t k, std::size_t from, Edge& cur, std::vector<Edge>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = from; v <= n; ++v) {
    cur.push_back(static_cast<VertexId>(v));
    subsets_of_size(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Counts of isomorphism classes by (n, m) for the same constraints an
/// EnumerationTask describes (budget and workers ignored).
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> naive_class_counts(const EnumerationTask& task) {
  if (task.max_vertices > 7) throw std::invalid_argument("reference enumeration is limited to 7 vertices");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (std::size_t n = 1; n <= task.max_vertices; ++n) {
    if (task.exact_vertices && n != *task.exact_vertices) continue;
    std::vector<Edge> candidates;
    const std::size_t top = std::min(n, task.max_edge_size.value_or(n));
    for (std::size_t k = std::max<std::size_t>(task.min_edge_size, 1); k <= top; ++k) {
      Edge cur;
      detail::subsets_of_size(n, k, 1, cur, candidates);
    }

    std::set<std::vector<Edge>> classes;
    std::vector<Edge> chosen;
    auto visit = [&](auto&& self, std::size_t from) -> void {
      if (!chosen.empty()) {
        std::vector<bool> covered(n + 1, false);
        for (const Edge& e : chosen)
          for (VertexId v : e) covered[v] = true;
        const bool all = std::all_of(covered.begin() + 1, covered.end(), [](bool c) { return c; });
        const std::size_t m = chosen.size();
        const bool size_ok = (!task.max_edges || m <= *task.max_edges) && (!task.min_edges || m >= *task.min_edges);
        if (all && size_ok) {
          Hypergraph h(n, chosen);
          if ((!task.connected_only || is_connected(h)) && classify(h).at_least(task.class_filter))
            classes.insert(brute_canonical_edges(h));
        }
      }
      for (std::size_t i = from; i < candidates.size(); ++i) {
        const Edge& e = candidates[i];
        const bool linear = std::all_of(chosen.begin(), chosen.end(), [&](const Edge& f) {
          return greechie::detail::intersection_size(e, f) <= 1;
        });
        if (!linear) continue;
        chosen.push_back(e);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    visit(visit, 0);
    for (const auto& edges : classes) ++counts[{n, edges.size()}];
  }
  return counts;
}

}  // namespace greechie::reference
