#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "conetutte/graph.hpp"

namespace conetutte {

// Default seed for every randomized check.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// std::mt19937_64 has a fully specified output sequence, unlike the
// standard distributions, so draws go through below() to stay reproducible
// across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish draw from [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Vertex count uniform in [1, max_vertices], edge count uniform in
// [0, max_edges], endpoints uniform (loops and parallel edges allowed).
Multigraph random_multigraph(SeededRng& rng, std::size_t max_vertices, std::size_t max_edges);

// A random spanning tree plus extra uniform edges, at most max_edges in
// total. The vertex count is capped at max_edges + 1.
Multigraph random_connected_multigraph(SeededRng& rng, std::size_t max_vertices, std::size_t max_edges);

// Every connected multigraph with 1..max_vertices vertices and at most
// max_edges edges, edges listed in (u, v) slot order. With
// up_to_isomorphism, one per class: a multiplicity matrix is kept only if
// no vertex permutation makes it lexicographically larger, so keep
// max_vertices small (<= 6).
std::vector<Multigraph> connected_multigraphs(std::size_t max_vertices, std::size_t max_edges,
                                              bool up_to_isomorphism);

}  // namespace conetutte
