#pragma once

// Canonical labeling of vertex-colored graphs by individualization and
// equitable-partition refinement, with automorphism pruning.
//
// The search tree is rooted at the refined color partition. Each non-leaf
// node individualizes one vertex of its first non-singleton cell and
// refines again; leaves are discrete partitions, i.e. orderings of the
// vertices. The canonical ordering is the leaf whose relabeled edge list is
// lexicographically smallest. Leaves with equal certificates differ by an
// automorphism; those are collected and used to skip children lying in the
// same orbit as an already explored sibling, and a subtree off the first
// path is abandoned as soon as it reproduces the first leaf.

#include "greechie/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace greechie {

struct ColoredGraph {
  std::vector<std::vector<std::uint32_t>> adjacency;
  /// Colors are 0..k-1; the canonical ordering lists color 0 first.
  std::vector<std::uint32_t> color;

  std::size_t size() const { return adjacency.size(); }

  void add_edge(std::uint32_t a, std::uint32_t b) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
};

using Permutation = std::vector<std::uint32_t>;

struct CanonicalLabeling {
  /// order[i] is the vertex placed at canonical position i.
  std::vector<std::uint32_t> order;
  /// position[v] is the canonical position of vertex v.
  std::vector<std::uint32_t> position;
  /// Automorphisms found during the search; they generate the full group.
  std::vector<Permutation> generators;
  std::size_t leaves_visited = 0;
};

namespace detail {

using Cells = std::vector<std::vector<std::uint32_t>>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

/// Refines to the coarsest equitable partition below `cells`. Splits depend
/// only on neighbour counts and cell order, so the result commutes with
/// relabeling.
inline void refine(const ColoredGraph& g, Cells& cells) {
  std::vector<std::uint32_t> count(g.size());
  for (std::size_t s = 0; s < cells.size();) {
    std::fill(count.begin(), count.end(), 0u);
    for (std::uint32_t u : cells[s])
      for (std::uint32_t w : g.adjacency[u]) ++count[w];
    Cells next;
    next.reserve(cells.size());
    bool split = false;
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::stable_sort(cell.begin(), cell.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
      std::size_t begin = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || count[cell[i]] != count[cell[begin]]) {
          next.emplace_back(cell.begin() + begin, cell.begin() + i);
          begin = i;
        }
      }
      split = split || next.back().size() != cell.size();
    }
    cells = std::move(next);
    s = split ? 0 : s + 1;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColoredGraph& g) : g_(g) {}

  CanonicalLabeling run() {
    std::uint32_t colors = 0;
    for (std::uint32_t c : g_.color) colors = std::max(colors, c + 1);
    Cells cells(colors);
    for (std::uint32_t v = 0; v < g_.size(); ++v) cells[g_.color[v]].push_back(v);
    std::erase_if(cells, [](const auto& c) { return c.empty(); });

    CanonicalLabeling out;
    if (g_.size() == 0) return out;
    std::vector<std::uint32_t> sequence;
    search(std::move(cells), sequence, true);
    out.order = best_order_;
    out.position.assign(g_.size(), 0);
    for (std::uint32_t i = 0; i < out.order.size(); ++i) out.position[out.order[i]] = i;
    out.generators = std::move(generators_);
    out.leaves_visited = leaves_;
    return out;
  }

 private:
  std::vector<std::uint64_t> certificate(const std::vector<std::uint32_t>& order) const {
    std::vector<std::uint32_t> pos(g_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<std::uint64_t> cert;
    for (std::uint32_t u = 0; u < g_.size(); ++u) {
      for (std::uint32_t w : g_.adjacency[u]) {
        if (u >= w) continue;
        std::uint64_t a = pos[u], b = pos[w];
        if (a > b) std::swap(a, b);
        cert.push_back(a << 32 | b);
      }
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  void record_automorphism(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    Permutation gamma(g_.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Returns true when the caller should abandon its subtree and unwind to
  // the nearest node on the first path.
  bool search(Cells cells, std::vector<std::uint32_t>& sequence, bool first_path) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, first_path);

    const std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<std::uint32_t> candidates = *target;
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::uint32_t> explored;
    for (std::uint32_t v : candidates) {
      if (!explored.empty() && same_orbit_as_explored(v, explored, sequence)) continue;
      Cells child = cells;
      auto& cell = child[target_index];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target_index), std::vector<std::uint32_t>{v});
      sequence.push_back(v);
      const bool abandon = search(std::move(child), sequence, first_path && explored.empty());
      sequence.pop_back();
      explored.push_back(v);
      if (abandon && !first_path) return true;
    }
    return false;
  }

  bool same_orbit_as_explored(std::uint32_t v, const std::vector<std::uint32_t>& explored,
                              const std::vector<std::uint32_t>& sequence) {
    UnionFind orbits(g_.size());
    bool any = false;
    for (const Permutation& gamma : generators_) {
      bool fixes = std::all_of(sequence.begin(), sequence.end(), [&](std::uint32_t s) { return gamma[s] == s; });
      if (!fixes) continue;
      any = true;
      for (std::uint32_t x = 0; x < g_.size(); ++x) orbits.unite(x, gamma[x]);
    }
    if (!any) return false;
    const std::uint32_t root = orbits.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](std::uint32_t u) { return orbits.find(u) == root; });
  }

  bool leaf(const Cells& cells, bool first_path) {
    ++leaves_;
    std::vector<std::uint32_t> order;
    order.reserve(g_.size());
    for (const auto& c : cells) order.push_back(c.front());
    auto cert = certificate(order);
    if (first_order_.empty()) {
      first_order_ = best_order_ = order;
      first_cert_ = best_cert_ = std::move(cert);
      return false;
    }
    if (cert == first_cert_) {
      record_automorphism(first_order_, order);
      return !first_path;
    }
    if (cert == best_cert_) {
      record_automorphism(best_order_, order);
      return false;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    }
    return false;
  }

  const ColoredGraph& g_;
  std::vector<std::uint32_t> first_order_, best_order_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<Permutation> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const ColoredGraph& g) { return detail::CanonicalSearch(g).run(); }

/// Vertex/edge incidence graph: nodes 0..n-1 are vertices (color 0), nodes
/// n.. are edges (color 1).
inline ColoredGraph incidence_graph(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  ColoredGraph g{std::vector<std::vector<std::uint32_t>>(n + h.edge_count()),
                 std::vector<std::uint32_t>(n + h.edge_count(), 0)};
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto node = static_cast<std::uint32_t>(n + i);
    g.color[node] = 1;
    for (VertexId v : h.edge(i)) g.add_edge(v - 1, node);
  }
  return g;
}

struct CanonicalForm {
  /// Relabeled hypergraph; edges listed in canonical order.
  Hypergraph form;
  /// vertex_map[v] is the new id of old vertex v (index 0 unused).
  std::vector<VertexId> vertex_map;
  /// edge_map[i] is the canonical index of old edge i.
  std::vector<std::size_t> edge_map;
  /// Automorphism generators on incidence-graph nodes of the input.
  std::vector<Permutation> generators;
};

/// Canonical representative of the isomorphism class of `h`: two
/// hypergraphs are isomorphic iff their canonical forms are equal.
inline CanonicalForm canonical_form(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const auto labeling = canonical_labeling(incidence_graph(h));
  std::vector<VertexId> vertex_map(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) vertex_map[v] = labeling.position[v - 1] + 1;
  std::vector<std::size_t> edge_map(h.edge_count());
  std::vector<Edge> edges(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    edge_map[i] = labeling.position[n + i] - n;
    Edge e;
    for (VertexId v : h.edge(i)) e.push_back(vertex_map[v]);
    std::sort(e.begin(), e.end());
    edges[edge_map[i]] = std::move(e);
  }
  return {Hypergraph(n, std::move(edges)), std::move(vertex_map), std::move(edge_map), labeling.generators};
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).form == canonical_form(b).form;
}

}  // namespace greechie
