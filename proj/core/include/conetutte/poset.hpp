#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conetutte/trees.hpp"

namespace conetutte {

/// Generalized-tree-shift poset on the trees with n vertices.
///
/// covers holds (low, high) node-index pairs, sorted and deduplicated,
/// where high is the image of low under one non-trivial shift. Since every
/// such shift adds exactly one leaf, these edges are already the cover
/// relation of the order.
struct HasseDiagram {
  std::size_t n = 0;
  // Sorted by canonical code.
  std::vector<CanonicalTree> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::optional<std::size_t> index_of(const TreeCode& code) const;
};

HasseDiagram build_poset(std::size_t n, unsigned jobs = 1);

// closure[a][b] is true iff a <= b (reflexive-transitive over covers).
std::vector<std::vector<bool>> order_closure(const HasseDiagram& d);
bool leq(const HasseDiagram& d, std::size_t a, std::size_t b);

struct Extremes {
  std::vector<std::size_t> minimals;
  std::vector<std::size_t> maximals;
};
Extremes extremes(const HasseDiagram& d);

// True when no cover (a, b) is implied by a longer chain a < c < b.
bool is_transitively_reduced(const HasseDiagram& d);
bool is_acyclic(const HasseDiagram& d);

std::string export_dot(const HasseDiagram& d);
// {"n":..., "trees":[[[u,v],...],...], "codes":[...], "covers":[[i,j],...]}
std::string export_json(const HasseDiagram& d);

}  // namespace conetutte
