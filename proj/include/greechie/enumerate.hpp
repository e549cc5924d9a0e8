#pragma once

// Isomorph-free generation of Greechie diagrams by canonical augmentation.
//
// Diagrams are grown one edge at a time on a fixed point set {0..N-1};
// points not yet covered stay isolated, so each isomorphism class of
// diagrams with at most N vertices appears exactly once in the tree. A
// child P+e is kept only if e lies in the automorphism orbit of the child's
// canonically last edge, which makes the parent of every diagram unique up
// to isomorphism. Candidate edges are taken one per orbit of Aut(P).
//
// Every constraint applied while growing (edge sizes, pairwise
// intersections of at most one point, minimum cycle order, edge count) is
// inherited by sub-diagrams, so pruning on it never loses a class.

#include "greechie/bounds.hpp"
#include "greechie/canonical.hpp"
#include "greechie/hypergraph.hpp"
#include "greechie/measures.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace greechie {

struct Budget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> nodes;
};

struct EnumerationTask {
  std::size_t max_vertices = 6;
  /// Minimum class: OA admits every Greechie diagram, OMP requires cycle
  /// order >= 4, OML >= 5.
  StructureKind class_filter = StructureKind::oa;
  std::size_t min_edge_size = 3;
  /// Defaults to max_vertices.
  std::optional<std::size_t> max_edge_size;
  bool connected_only = true;
  std::optional<std::size_t> max_edges;
  /// Emission filters that do not prune the search.
  std::optional<std::size_t> exact_vertices;
  std::optional<std::size_t> min_edges;
  std::size_t workers = 1;
  Budget budget;
};

struct EnumerationResult {
  /// One canonical representative per class, sorted by (n, m, edge bitmasks).
  std::vector<Hypergraph> diagrams;
  bool complete = true;
  std::uint64_t nodes_visited = 0;
  double seconds = 0;

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts() const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    for (const auto& h : diagrams) ++out[{h.vertex_count(), h.edge_count()}];
    return out;
  }
};

namespace detail {

using Mask = std::uint32_t;
constexpr std::size_t max_enumeration_points = 16;

// A diagram on the point set whose covered points are 0..covered-1, edges
// in canonical order.
struct Shape {
  std::vector<Mask> edges;
  std::size_t covered = 0;
};

inline bool shape_less(const Shape& a, const Shape& b) {
  if (a.covered != b.covered) return a.covered < b.covered;
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

struct Node {
  Shape shape;
  std::vector<Permutation> point_generators;  // act on all N points
};

inline Hypergraph shape_to_hypergraph(const Shape& s) {
  std::vector<Edge> edges;
  edges.reserve(s.edges.size());
  for (Mask m : s.edges) {
    Edge e;
    for (std::size_t p = 0; p < 32; ++p)
      if (m >> p & 1u) e.push_back(static_cast<VertexId>(p + 1));
    edges.push_back(std::move(e));
  }
  return Hypergraph(s.covered, std::move(edges));
}

inline bool shape_connected(const Shape& s) {
  if (s.edges.empty()) return false;
  Mask reached = s.edges.front();
  for (bool grew = true; grew;) {
    grew = false;
    for (Mask e : s.edges) {
      if ((e & reached) && (e & ~reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  const Mask all = s.covered == 32 ? ~Mask{0} : (Mask{1} << s.covered) - 1;
  return reached == all;
}

inline Mask apply(const Permutation& perm, Mask m) {
  Mask out = 0;
  while (m) {
    const int p = std::countr_zero(m);
    out |= Mask{1} << perm[static_cast<std::size_t>(p)];
    m &= m - 1;
  }
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(const EnumerationTask& task) : task_(task), points_(task.max_vertices) {
    if (points_ < 3) throw std::invalid_argument("enumeration needs max_vertices >= 3");
    if (points_ > max_enumeration_points)
      throw std::invalid_argument("enumeration supports at most " + std::to_string(max_enumeration_points) +
                                  " vertices");
    if (task.min_edge_size < 3) throw std::invalid_argument("enumeration needs min_edge_size >= 3");
    if (task.class_filter == StructureKind::not_greechie) throw std::invalid_argument("invalid class filter");
    const std::size_t max_size = std::min(task.max_edge_size.value_or(points_), points_);
    for (Mask m = 1; m < (Mask{1} << points_); ++m) {
      const auto size = static_cast<std::size_t>(std::popcount(m));
      if (size >= task.min_edge_size && size <= max_size) candidates_.push_back(m);
    }
    // Small edges first so that low edge counts are reached early.
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    start_ = std::chrono::steady_clock::now();
  }

  EnumerationResult run() {
    EnumerationResult result;
    if (task_.budget.nodes && *task_.budget.nodes == 0) {
      result.complete = false;
      return result;
    }

    // Expand the first two levels serially, then hand the subtrees to workers.
    Node root{{}, isolated_generators(0)};
    std::vector<Shape> emitted;
    std::vector<Node> frontier;
    for (Node& child : children(root)) {
      consider(child.shape, emitted);
      for (Node& grandchild : children(child)) {
        consider(grandchild.shape, emitted);
        frontier.push_back(std::move(grandchild));
      }
    }

    std::vector<std::vector<Shape>> per_task(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < frontier.size(); i = next++) expand(frontier[i], per_task[i]);
    };
    const std::size_t workers = std::max<std::size_t>(1, task_.workers);
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto& list : per_task) emitted.insert(emitted.end(), list.begin(), list.end());

    std::sort(emitted.begin(), emitted.end(), shape_less);
    result.diagrams.reserve(emitted.size());
    for (const Shape& s : emitted) result.diagrams.push_back(shape_to_hypergraph(s));
    result.complete = !stopped_;
    result.nodes_visited = nodes_;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result;
  }

 private:
  bool out_of_budget() {
    if (stopped_) return true;
    if (task_.budget.nodes && nodes_ >= *task_.budget.nodes) stopped_ = true;
    if (task_.budget.seconds &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > *task_.budget.seconds)
      stopped_ = true;
    return stopped_;
  }

  void expand(const Node& node, std::vector<Shape>& out) {
    for (Node& child : children(node)) {
      consider(child.shape, out);
      expand(child, out);
    }
  }

  void consider(const Shape& s, std::vector<Shape>& out) const {
    if (task_.connected_only && !shape_connected(s)) return;
    if (task_.exact_vertices && s.covered != *task_.exact_vertices) return;
    if (task_.min_edges && s.edges.size() < *task_.min_edges) return;
    out.push_back(s);
  }

  // Symmetric group on the isolated points covered..N-1.
  std::vector<Permutation> isolated_generators(std::size_t covered) const {
    std::vector<Permutation> gens;
    if (points_ - covered < 2) return gens;
    Permutation swap(points_), cycle(points_);
    for (std::uint32_t p = 0; p < points_; ++p) swap[p] = cycle[p] = p;
    std::swap(swap[covered], swap[covered + 1]);
    gens.push_back(swap);
    if (points_ - covered > 2) {
      for (std::size_t p = covered; p < points_; ++p)
        cycle[p] = static_cast<std::uint32_t>(p + 1 == points_ ? covered : p + 1);
      gens.push_back(cycle);
    }
    return gens;
  }

  bool girth_ok(const std::vector<Mask>& edges, std::size_t covered_hint) const {
    if (task_.class_filter == StructureKind::oa) return true;
    Shape s{edges, covered_hint};
    auto order = min_cycle_order(shape_to_hypergraph(s));
    return !order || *order >= required_girth(task_.class_filter);
  }

  std::vector<Node> children(const Node& parent) {
    std::vector<Node> out;
    if (task_.max_edges && parent.shape.edges.size() >= *task_.max_edges) return out;
    if (out_of_budget()) return out;
    ++nodes_;

    std::vector<bool> seen(std::size_t{1} << points_, false);
    std::set<std::vector<Mask>> accepted;
    for (Mask e : candidates_) {
      if (seen[e]) continue;
      bool fits = true;
      for (Mask f : parent.shape.edges) {
        if (std::popcount(e & f) > 1) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      // Mark the whole Aut(parent)-orbit of e.
      std::vector<Mask> orbit{e};
      seen[e] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const Permutation& gamma : parent.point_generators) {
          Mask image = apply(gamma, orbit[i]);
          if (!seen[image]) {
            seen[image] = true;
            orbit.push_back(image);
          }
        }
      }

      std::vector<Mask> edges = parent.shape.edges;
      edges.push_back(e);
      Mask covered_mask = 0;
      for (Mask f : edges) covered_mask |= f;
      auto child = canonical_child(edges, covered_mask);
      if (!child) continue;
      if (!girth_ok(child->shape.edges, child->shape.covered)) continue;
      if (!accepted.insert(child->shape.edges).second) continue;
      out.push_back(std::move(*child));
    }
    return out;
  }

  // Canonicalizes P+e and applies the canonical-parent test; nullopt when e
  // is not in the orbit of the canonically last edge.
  std::optional<Node> canonical_child(const std::vector<Mask>& edges, Mask covered_mask) const {
    std::vector<std::uint32_t> local(points_, 0);
    std::vector<std::uint32_t> global;
    for (std::uint32_t p = 0; p < points_; ++p) {
      if (covered_mask >> p & 1u) {
        local[p] = static_cast<std::uint32_t>(global.size());
        global.push_back(p);
      }
    }
    const std::size_t c = global.size();
    const std::size_t m = edges.size();
    ColoredGraph g{std::vector<std::vector<std::uint32_t>>(c + m), std::vector<std::uint32_t>(c + m, 0)};
    for (std::size_t i = 0; i < m; ++i) {
      g.color[c + i] = 1;
      Mask e = edges[i];
      while (e) {
        const auto p = static_cast<std::size_t>(std::countr_zero(e));
        g.add_edge(local[p], static_cast<std::uint32_t>(c + i));
        e &= e - 1;
      }
    }
    const auto labeling = canonical_labeling(g);

    const std::uint32_t last = labeling.order.back();
    const auto added = static_cast<std::uint32_t>(c + m - 1);
    if (last != added) {
      UnionFind orbits(c + m);
      for (const Permutation& gamma : labeling.generators)
        for (std::uint32_t x = 0; x < c + m; ++x) orbits.unite(x, gamma[x]);
      if (orbits.find(last) != orbits.find(added)) return std::nullopt;
    }

    Node node;
    node.shape.covered = c;
    node.shape.edges.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Mask relabeled = 0;
      Mask e = edges[i];
      while (e) {
        const auto p = static_cast<std::size_t>(std::countr_zero(e));
        relabeled |= Mask{1} << labeling.position[local[p]];
        e &= e - 1;
      }
      node.shape.edges[labeling.position[c + i] - c] = relabeled;
    }
    node.point_generators = isolated_generators(c);
    for (const Permutation& gamma : labeling.generators) {
      Permutation on_points(points_);
      for (std::uint32_t p = 0; p < points_; ++p) on_points[p] = p;
      bool moves = false;
      for (std::uint32_t u = 0; u < c; ++u) {
        on_points[labeling.position[u]] = labeling.position[gamma[u]];
        moves = moves || gamma[u] != u;
      }
      if (moves) node.point_generators.push_back(std::move(on_points));
    }
    return node;
  }

  const EnumerationTask& task_;
  std::size_t points_;
  std::vector<Mask> candidates_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stopped_{false};
};

}  // namespace detail

/// One representative per isomorphism class of Greechie diagrams matching
/// the task, with edges of size >= min_edge_size, in canonical order. The
/// output does not depend on the worker count.
inline EnumerationResult enumerate_diagrams(const EnumerationTask& task) { return detail::Enumerator(task).run(); }

// ---------------------------------------------------------------------------
// State existence over small diagrams
// ---------------------------------------------------------------------------

struct EnumerationReport {
  std::size_t max_vertices = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;  // (n, m) -> classes
  std::size_t diagrams = 0;
  std::vector<Hypergraph> stateless;
  bool complete = true;
  std::uint64_t nodes_visited = 0;
  double seconds = 0;
  std::string note;
};

/// Enumerates every connected Greechie diagram with at most max_n vertices
/// and edges of size 3..max_n and looks for one without a state.
inline EnumerationReport verify_small_oa_states(std::size_t max_n, Budget budget = {}, std::size_t workers = 1) {
  if (max_n > 9) throw std::invalid_argument("state verification is limited to at most 9 vertices");
  EnumerationTask task;
  task.max_vertices = max_n;
  task.class_filter = StructureKind::oa;
  task.workers = workers;
  task.budget = budget;
  auto result = enumerate_diagrams(task);

  EnumerationReport report;
  report.max_vertices = max_n;
  report.counts = result.counts();
  report.diagrams = result.diagrams.size();
  report.complete = result.complete;
  report.nodes_visited = result.nodes_visited;
  for (const Hypergraph& h : result.diagrams)
    if (!find_probability_measure(h)) report.stateless.push_back(h);
  report.seconds = result.seconds;
  report.note =
      "two-element edges are not generated: in a Greechie diagram they are disjoint from all other edges and "
      "any state extends by 1/2, 1/2; disconnected diagrams have a state iff every component does";
  return report;
}

struct StatelessSearch {
  std::optional<Hypergraph> diagram;
  /// False when the budget ran out before the search space was exhausted.
  bool exhaustive = true;
  std::size_t diagrams_checked = 0;
};

/// First connected diagram on exactly n vertices without a state, scanning
/// edge counts from n+1 up to the OA bound in canonical order.
inline StatelessSearch find_stateless(std::size_t n, Budget budget = {}, std::size_t workers = 1) {
  StatelessSearch out;
  if ((budget.nodes && *budget.nodes == 0) || (budget.seconds && *budget.seconds <= 0)) {
    out.exhaustive = false;
    return out;
  }
  EnumerationTask task;
  task.max_vertices = n;
  task.exact_vertices = n;
  task.min_edges = n + 1;
  task.max_edges = static_cast<std::size_t>(max_edges_oa(static_cast<std::int64_t>(n)));
  task.workers = workers;
  task.budget = budget;
  auto result = enumerate_diagrams(task);
  out.exhaustive = result.complete;
  for (const Hypergraph& h : result.diagrams) {
    ++out.diagrams_checked;
    if (h.is_uniform(3)) continue;  // the constant 1/3 assignment is a state
    if (!find_probability_measure(h)) {
      out.diagram = h;
      break;
    }
  }
  return out;
}

}  // namespace greechie
