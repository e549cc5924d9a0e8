#pragma once

// Hypergraph model for Greechie diagrams: parsing, serialization, degree and
// adjacency queries, cycle order (girth) and OA/OMP/OML classification.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace greechie {

using VertexId = std::uint32_t;

/// An edge is a set of 1-based vertex ids, stored ascending.
using Edge = std::vector<VertexId>;

/// Raised when a hypergraph violates its structural invariants.
class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parser; carries the 1-based offending line (0 when the
/// failure is not tied to a single line, e.g. an unused vertex id).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Finite hypergraph on vertices 1..n. Every vertex lies in at least one edge,
/// edges are nonempty and pairwise distinct. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(std::size_t vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ == 0) throw DiagramError("hypergraph needs at least one vertex");
    if (n_ > std::numeric_limits<VertexId>::max()) throw DiagramError("vertex count too large");
    std::vector<bool> covered(n_ + 1, false);
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.empty()) throw DiagramError("edge " + std::to_string(i + 1) + " is empty");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw DiagramError("edge " + std::to_string(i + 1) + " repeats a vertex");
      for (VertexId v : e) {
        if (v == 0 || v > n_)
          throw DiagramError("edge " + std::to_string(i + 1) + " mentions vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(n_));
        covered[v] = true;
      }
      if (!seen.insert(e).second) throw DiagramError("edge " + std::to_string(i + 1) + " is a duplicate");
    }
    for (std::size_t v = 1; v <= n_; ++v)
      if (!covered[v]) throw DiagramError("vertex " + std::to_string(v) + " lies in no edge");
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool is_uniform(std::size_t k) const {
    return std::all_of(edges_.begin(), edges_.end(), [k](const Edge& e) { return e.size() == k; });
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

namespace detail {

inline void check_vertex(const Hypergraph& h, VertexId v) {
  if (v == 0 || v > h.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(h.vertex_count()));
}

inline std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Reads the edge-list format: one edge per line as whitespace-separated
/// positive integers, `#` comments, blank lines ignored. The vertex count is
/// the largest id mentioned; ids that never occur are rejected.
inline Hypergraph parse_diagram(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  VertexId max_id = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    Edge edge;
    std::string token;
    while (tokens >> token) {
      if (token.find_first_not_of("0123456789+-") != std::string::npos)
        throw ParseError(line_no, "malformed token '" + token + "'");
      long long value = 0;
      try {
        std::size_t used = 0;
        value = std::stoll(token, &used);
        if (used != token.size()) throw ParseError(line_no, "malformed token '" + token + "'");
      } catch (const std::logic_error&) {
        throw ParseError(line_no, "malformed token '" + token + "'");
      }
      if (value <= 0) throw ParseError(line_no, "vertex id " + token + " is not positive");
      if (value > std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "vertex id " + token + " too large");
      edge.push_back(static_cast<VertexId>(value));
    }
    if (edge.empty()) continue;
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      throw ParseError(line_no, "edge repeats a vertex");
    if (!seen.insert(edge).second) throw ParseError(line_no, "duplicate edge");
    max_id = std::max(max_id, edge.back());
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw ParseError(0, "diagram has no edges");
  std::vector<bool> covered(max_id + 1, false);
  for (const Edge& e : edges)
    for (VertexId v : e) covered[v] = true;
  for (VertexId v = 1; v <= max_id; ++v)
    if (!covered[v]) throw ParseError(0, "vertex " + std::to_string(v) + " lies in no edge");
  return Hypergraph(max_id, std::move(edges));
}

inline Hypergraph parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_diagram(in);
}

inline void serialize_diagram(const Hypergraph& h, std::ostream& out) {
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != 0) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

inline std::string serialize_diagram(const Hypergraph& h) {
  std::ostringstream out;
  serialize_diagram(h, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Local structure
// ---------------------------------------------------------------------------

inline std::size_t degree(const Hypergraph& h, VertexId v) {
  detail::check_vertex(h, v);
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(), [v](const Edge& e) {
    return std::binary_search(e.begin(), e.end(), v);
  }));
}

inline std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.vertex_count() + 1, 0);
  for (const Edge& e : h.edges())
    for (VertexId v : e) ++d[v];
  return d;
}

/// Vertices sharing at least one edge with `v`, ascending, excluding `v`.
inline std::vector<VertexId> adjacency(const Hypergraph& h, VertexId v) {
  detail::check_vertex(h, v);
  std::set<VertexId> out;
  for (const Edge& e : h.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    for (VertexId u : e)
      if (u != v) out.insert(u);
  }
  return {out.begin(), out.end()};
}

inline bool is_connected(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n + 1);
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (VertexId v : h.edge(i)) incident[v].push_back(i);
  std::vector<bool> seen_vertex(n + 1, false), seen_edge(h.edge_count(), false);
  std::vector<VertexId> stack{1};
  seen_vertex[1] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (std::size_t ei : incident[v]) {
      if (seen_edge[ei]) continue;
      seen_edge[ei] = true;
      for (VertexId u : h.edge(ei)) {
        if (seen_vertex[u]) continue;
        seen_vertex[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// Cycles and classification
// ---------------------------------------------------------------------------

/// Smallest order of a cycle (alternating distinct vertices and distinct
/// edges), or nullopt when the hypergraph is acyclic. Computed as half the
/// girth of the bipartite vertex/edge incidence graph, by BFS from every node.
inline std::optional<std::size_t> min_cycle_order(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const std::size_t nodes = n + h.edge_count();
  // Nodes 0..n-1 are vertices, n.. are edges.
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (VertexId v : h.edge(i)) {
      adj[v - 1].push_back(n + i);
      adj[n + i].push_back(v - 1);
    }
  }
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::size_t girth = unseen;
  std::vector<std::size_t> dist(nodes), parent(nodes);
  for (std::size_t root = 0; root < nodes; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = unseen;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      // No shorter cycle through this root can appear past this depth.
      if (2 * dist[u] >= girth) break;
      for (std::size_t w : adj[u]) {
        if (dist[w] == unseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (girth == unseen) return std::nullopt;
  return girth / 2;
}

enum class GreechieCondition {
  difference,    // |e \ f| >= 2
  intersection,  // |e ∩ f| <= 1
};

struct GreechieViolation {
  std::size_t first_edge;   // 0-based edge indices
  std::size_t second_edge;
  GreechieCondition condition;

  std::string describe() const {
    std::string pair = "edges " + std::to_string(first_edge + 1) + " and " + std::to_string(second_edge + 1);
    if (condition == GreechieCondition::difference) return pair + ": one differs from the other by fewer than 2 vertices";
    return pair + ": share more than one vertex";
  }

  friend bool operator==(const GreechieViolation&, const GreechieViolation&) = default;
};

/// Every failing (pair, condition); empty iff the hypergraph is a Greechie
/// diagram. A pair may fail both conditions and is then listed twice.
inline std::vector<GreechieViolation> greechie_violations(const Hypergraph& h) {
  std::vector<GreechieViolation> out;
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::size_t common = detail::intersection_size(edges[i], edges[j]);
      if (edges[i].size() - common < 2 || edges[j].size() - common < 2)
        out.push_back({i, j, GreechieCondition::difference});
      if (common > 1) out.push_back({i, j, GreechieCondition::intersection});
    }
  }
  return out;
}

inline bool is_greechie(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::size_t common = detail::intersection_size(edges[i], edges[j]);
      if (common > 1 || edges[i].size() - common < 2 || edges[j].size() - common < 2) return false;
    }
  }
  return true;
}

enum class StructureKind { not_greechie, oa, omp, oml };

inline std::string_view to_string(StructureKind k) {
  switch (k) {
    case StructureKind::not_greechie: return "NotGreechie";
    case StructureKind::oa: return "OA";
    case StructureKind::omp: return "OMP";
    case StructureKind::oml: return "OML";
  }
  return "?";
}

/// Accepts "oa", "OMP", ... (case-insensitive); nullopt otherwise.
inline std::optional<StructureKind> parse_structure_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "oa") return StructureKind::oa;
  if (lower == "omp") return StructureKind::omp;
  if (lower == "oml") return StructureKind::oml;
  return std::nullopt;
}

/// Smallest cycle order admitted by a class: OA 3, OMP 4, OML 5.
constexpr std::size_t required_girth(StructureKind k) {
  switch (k) {
    case StructureKind::omp: return 4;
    case StructureKind::oml: return 5;
    default: return 3;
  }
}

struct Classification {
  StructureKind kind = StructureKind::not_greechie;
  std::vector<GreechieViolation> violations;
  std::optional<std::size_t> min_cycle_order;

  /// True when this is a Greechie diagram of class `k` or a stronger one.
  bool at_least(StructureKind k) const { return kind != StructureKind::not_greechie && kind >= k; }
};

inline Classification classify(const Hypergraph& h) {
  Classification c;
  c.min_cycle_order = min_cycle_order(h);
  c.violations = greechie_violations(h);
  if (!c.violations.empty()) return c;
  const std::size_t order = c.min_cycle_order.value_or(std::numeric_limits<std::size_t>::max());
  if (order >= 5)
    c.kind = StructureKind::oml;
  else if (order == 4)
    c.kind = StructureKind::omp;
  else
    c.kind = StructureKind::oa;
  return c;
}

}  // namespace greechie
