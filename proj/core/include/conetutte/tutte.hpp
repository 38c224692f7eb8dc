#pragma once

#include <cstddef>
#include <string>

#include "conetutte/graph.hpp"
#include "conetutte/poly.hpp"

namespace conetutte {

#ifndef CONETUTTE_MEMO_DEFAULT
#define CONETUTTE_MEMO_DEFAULT 1
#endif

struct TutteOptions {
  // Cache intermediate results keyed by memo_key(). Results never depend
  // on this; it only exists so the two paths can be diffed.
  bool memoize = CONETUTTE_MEMO_DEFAULT != 0;
};

/// T_G(1, y) by deletion-contraction.
///
/// Each step deletes every loop (factor y), contracts every bridge (factor
/// x = 1) and then branches on the lowest-id remaining edge. Works for
/// disconnected graphs and the empty graph (value 1).
IntPolynomial tutte_at_x1(const Multigraph& g, const TutteOptions& options = {});

// Relabeling-invariant-ish cache key: vertices are ordered by a
// degree-seeded color refinement (ties by original id), isolated vertices
// are dropped and the relabeled edge list is sorted. Equal keys always mean
// isomorphic graphs; isomorphic graphs usually, not always, share a key.
std::string memo_key(const Multigraph& g);

// Per-thread memo table used by tutte_at_x1.
std::size_t tutte_cache_size();
void clear_tutte_cache();

// Brute-force corank-nullity expansion over all 2^|E| edge subsets.
// Throws InvalidArgument above kSubsetOracleMaxEdges edges.
inline constexpr std::size_t kSubsetOracleMaxEdges = 20;
BivarPolynomial tutte_subset_oracle(const Multigraph& g);

// Kirchhoff's matrix-tree theorem with fraction-free (Bareiss) elimination.
// Loops are ignored. Throws InvalidArgument for a disconnected graph.
Coeff spanning_tree_count(const Multigraph& g);

}  // namespace conetutte
