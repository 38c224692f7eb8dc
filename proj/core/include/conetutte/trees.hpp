#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conetutte/graph.hpp"

namespace conetutte {

/// Canonical code of an unlabeled tree.
///
/// A rooted tree encodes as "(" + concatenated child codes in ascending
/// string order + ")", so a single vertex is "()" and the path on three
/// vertices rooted at its middle is "(()())". An unrooted tree is rooted
/// at its center; with two centers the smaller of the two codes wins.
/// Two trees are isomorphic exactly when their codes are equal, and codes
/// compare as plain strings.
using TreeCode = std::string;

TreeCode canonical_code(const Multigraph& tree);
// Rooted variant (children sorted, no center search).
TreeCode rooted_code(const Multigraph& tree, VertexId root);
// Builds the tree described by a code, vertices numbered in preorder.
Multigraph tree_from_code(const TreeCode& code);

struct CanonicalTree {
  // Representative with vertices numbered in preorder of the code.
  Multigraph graph;
  TreeCode code;

  static CanonicalTree from_graph(const Multigraph& tree);
  std::size_t vertex_count() const { return graph.vertex_count(); }
  std::size_t leaf_count() const { return graph.leaves().size(); }
};

inline constexpr std::size_t kDefaultMaxTreeVertices = 12;
// kDefaultMaxTreeVertices unless CONETUTTE_MAX_N is set.
std::size_t max_tree_vertices();

// One representative per isomorphism class of trees on n vertices, sorted
// by code. Built by attaching a leaf to every vertex of every tree on n-1
// vertices. Throws InvalidArgument unless 1 <= n <= max_tree_vertices().
std::vector<CanonicalTree> enumerate_trees(std::size_t n);

// --- Generalized tree shift ------------------------------------------------

// Endpoints of a path whose interior vertices all have degree 2.
struct ShiftSite {
  VertexId v1;
  VertexId vk;
  friend bool operator==(const ShiftSite&, const ShiftSite&) = default;
};

// Vertex sequence of the unique tree path from a to b.
std::vector<VertexId> tree_path(const Multigraph& tree, VertexId a, VertexId b);
bool is_shift_site(const Multigraph& tree, const ShiftSite& site);
// Every unordered pair that qualifies, reported with v1 < vk, in
// lexicographic order. Adjacent pairs are included.
std::vector<ShiftSite> shift_sites(const Multigraph& tree);

struct RootedGraph {
  Multigraph graph;
  VertexId root;
};

struct ShiftDecomposition {
  // Component of v1 after removing the path's edges and interior vertices.
  RootedGraph h1;
  // Component of vk.
  RootedGraph h2;
  // Path length in vertices.
  std::size_t k;
  // Fresh path on k vertices: 0 plays v1 and k-1 plays vk.
  Multigraph pk;
};

// Components keep the relative order of the original vertex ids.
ShiftDecomposition decompose(const Multigraph& tree, const ShiftSite& site);

// (H1 : H2) : Pk, glued at the merged v1/vk vertex through Pk's vk end.
Multigraph shifted_tree(const Multigraph& tree, const ShiftSite& site);
CanonicalTree apply_shift(const Multigraph& tree, const ShiftSite& site);

}  // namespace conetutte
