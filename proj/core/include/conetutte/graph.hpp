#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conetutte/error.hpp"

namespace conetutte {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class EdgeClass { Loop, Bridge, Ordinary };

const char* to_string(EdgeClass c);

/// Undirected multigraph on vertices 0..vertex_count-1. Loops and parallel
/// edges are allowed; an edge's id is its index in edges().
///
/// Values are immutable: every structural operation returns a new graph
/// with a fixed, documented renumbering so results are reproducible.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count, std::vector<Edge> edges = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  // A loop contributes 2.
  std::size_t degree(VertexId v) const;
  // Vertices of degree exactly 1, ascending.
  std::vector<VertexId> leaves() const;
  bool is_connected() const;
  std::size_t component_count() const;
  // Component index per vertex, numbered in order of first appearance.
  std::vector<std::uint32_t> component_labels() const;
  // |E| - |V| + #components
  std::size_t nullity() const;
  std::size_t loop_count() const;
  // True if v has a non-loop edge to a different vertex.
  bool has_neighbor(VertexId v) const;
  bool is_tree() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// --- Text and JSON forms ---------------------------------------------------

// One "u v" pair per line; blank lines and lines starting with '#' are
// skipped. An optional "n <count>" line fixes the vertex count (needed for
// isolated vertices); otherwise it is 1 + the largest id seen.
Multigraph parse_edge_list(std::string_view text);
Multigraph read_edge_list_file(const std::string& path);
// "n <count>" header followed by one edge per line.
std::string to_edge_list(const Multigraph& g);

// {"n": vertex_count, "edges": [[u,v],...]}
std::string to_json(const Multigraph& g);
Multigraph graph_from_json(std::string_view text);

// --- Structural operations -------------------------------------------------

// Remaining edges keep their relative order.
Multigraph delete_edge(const Multigraph& g, EdgeId e);

// Merges the endpoints of a non-loop edge. The merged vertex keeps the
// smaller id, the larger id's slot is removed and higher ids shift down.
// Other edges between the two endpoints become loops.
Multigraph contract_edge(const Multigraph& g, EdgeId e);
// Id of vertex w after contracting an edge joining a and b.
VertexId id_after_contraction(VertexId w, VertexId a, VertexId b);

EdgeClass classify_edge(const Multigraph& g, EdgeId e);
// Bridge flag per edge (Tarjan lowlink over edge ids, so parallel copies
// are never bridges).
std::vector<bool> find_bridges(const Multigraph& g);

struct ConeResult {
  Multigraph graph;
  VertexId apex;
  // spokes[v] is the edge joining v to the apex.
  std::vector<EdgeId> spokes;
};

// Adds apex vertex_count() and spoke edges after the original edges.
ConeResult cone(const Multigraph& g);

struct OneSumResult {
  Multigraph graph;
  VertexId glued;
};

// Identifies v1 in g1 with v2 in g2. g1 keeps its ids, g2's other vertices
// follow in order; edges of g1 come first.
OneSumResult one_sum(const Multigraph& g1, VertexId v1, const Multigraph& g2, VertexId v2);

// Vertex w of g becomes perm[w].
Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm);
// Same vertices, edge list reversed (for pivot-order independence checks).
Multigraph reverse_edges(const Multigraph& g);

// --- Common families -------------------------------------------------------

Multigraph single_vertex();
// Path on n vertices 0-1-...-(n-1).
Multigraph path_graph(std::size_t n);
// Vertex 0 is the center.
Multigraph star_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
// Legs of the given edge lengths sharing vertex 0.
Multigraph spider_graph(std::span<const std::size_t> legs);

}  // namespace conetutte
