#include "conetutte/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace conetutte {

namespace {

template <class T>
void shuffle(SeededRng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

Multigraph random_multigraph(SeededRng& rng, std::size_t max_vertices, std::size_t max_edges) {
  if (max_vertices == 0) throw InvalidArgument("max_vertices must be positive");
  const auto n = 1 + rng.below(max_vertices);
  const auto m = rng.below(max_edges + 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    edges.push_back({static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n))});
  return Multigraph(n, std::move(edges));
}

Multigraph random_connected_multigraph(SeededRng& rng, std::size_t max_vertices, std::size_t max_edges) {
  if (max_vertices == 0) throw InvalidArgument("max_vertices must be positive");
  const std::size_t cap = std::min(max_vertices, max_edges + 1);
  const auto n = 1 + rng.below(cap);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(rng.below(v)), v});
  const auto extra = rng.below(max_edges - (n - 1) + 1);
  for (std::size_t i = 0; i < extra; ++i)
    edges.push_back({static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n))});
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  shuffle(rng, perm);
  shuffle(rng, edges);
  for (auto& e : edges) e = {perm[e.u], perm[e.v]};
  return Multigraph(n, std::move(edges));
}

std::vector<Multigraph> connected_multigraphs(std::size_t max_vertices, std::size_t max_edges,
                                              bool up_to_isomorphism) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    // Slots are the pairs (i, j), i <= j, in lexicographic order.
    std::vector<std::pair<VertexId, VertexId>> slots;
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i; j < n; ++j) {
        slot_of[i][j] = slot_of[j][i] = slots.size();
        slots.push_back({i, j});
      }
    const std::size_t s = slots.size();

    // Slot images under every vertex permutation except the identity.
    std::vector<std::vector<std::size_t>> images;
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    while (up_to_isomorphism && std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::size_t> img(s);
      for (std::size_t k = 0; k < s; ++k) img[k] = slot_of[perm[slots[k].first]][perm[slots[k].second]];
      images.push_back(std::move(img));
    }

    // Keep a multiplicity vector only if no relabeling makes it
    // lexicographically larger.
    auto is_canonical = [&](const std::vector<std::uint8_t>& mult) {
      std::vector<std::uint8_t> permuted(s);
      for (const auto& img : images) {
        for (std::size_t k = 0; k < s; ++k) permuted[img[k]] = mult[k];
        if (permuted > mult) return false;
      }
      return true;
    };

    std::vector<std::uint8_t> mult(s, 0);
    auto emit = [&] {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < s; ++k)
        for (std::uint8_t c = 0; c < mult[k]; ++c) edges.push_back({slots[k].first, slots[k].second});
      Multigraph g(n, std::move(edges));
      if (g.is_connected() && is_canonical(mult)) out.push_back(std::move(g));
    };
    // Odometer over all vectors with total <= max_edges.
    auto rec = [&](auto&& self, std::size_t k, std::size_t budget) -> void {
      if (k == s) {
        emit();
        return;
      }
      for (std::size_t c = 0; c <= budget; ++c) {
        mult[k] = static_cast<std::uint8_t>(c);
        self(self, k + 1, budget - c);
      }
      mult[k] = 0;
    };
    rec(rec, 0, max_edges);
  }
  return out;
}

}  // namespace conetutte
