#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conetutte/cone.hpp"
#include "conetutte/tutte.hpp"
#include "oracles.hpp"

using namespace conetutte;
using conetutte::testing::subset_tutte_at_x1;

namespace {

const IntPolynomial kY = IntPolynomial::monomial(1);

// g and h straight from the definitions, through the subset oracle.
IntPolynomial oracle_g(const Multigraph& g, VertexId v) {
  if (!g.has_neighbor(v)) return {};
  auto c = cone(g);
  return subset_tutte_at_x1(delete_edge(c.graph, c.spokes[v]));
}

IntPolynomial oracle_h(const Multigraph& g, VertexId v) {
  auto c = cone(g);
  return subset_tutte_at_x1(contract_edge(c.graph, c.spokes[v]));
}

}  // namespace

TEST_CASE("small values") {
  CHECK(cone_f(single_vertex()) == IntPolynomial{1});
  CHECK(cone_f(path_graph(2)) == IntPolynomial{2, 1});
  CHECK(cone_f(path_graph(3)) == IntPolynomial{4, 3, 1});
  CHECK(cone_f(path_graph(4)) == IntPolynomial{8, 8, 4, 1});
  CHECK(cone_f(path_graph(7)) == IntPolynomial{64, 112, 104, 63, 26, 7, 1});
  CHECK(cone_f(star_graph(7)) == IntPolynomial{64, 63, 57, 42, 22, 7, 1});

  CHECK(cone_g(single_vertex(), 0).is_zero());
  CHECK(cone_h(single_vertex(), 0) == IntPolynomial{1});
  CHECK(cone_g(path_graph(2), 0) == IntPolynomial{1});
  CHECK(cone_h(path_graph(2), 0) == IntPolynomial{1, 1});
  CHECK(cone_g(path_graph(3), 0) == IntPolynomial{2, 1});
  CHECK(cone_g(path_graph(3), 1) == IntPolynomial{3, 1});
  CHECK(cone_h(path_graph(3), 0) == IntPolynomial{2, 2, 1});
  // A loop alone does not give v a neighbor.
  CHECK(cone_g(Multigraph(1, {{0, 0}}), 0).is_zero());
  CHECK(cone_f(Multigraph(1, {{0, 0}})) == kY);

  auto t = cone_triple(path_graph(3), 2);
  CHECK(t.vertex == 2);
  CHECK(t.f == cone_f(path_graph(3)));
  CHECK(t.g == cone_g(path_graph(3), 2));
  CHECK(t.h == cone_h(path_graph(3), 2));

  CHECK_THROWS_AS(cone_g(path_graph(3), 3), InvalidArgument);
  CHECK_THROWS_AS(cone_h(path_graph(3), 7), InvalidArgument);
}

TEST_CASE("f at y=1 counts spanning trees of the cone") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(cone_f(path_graph(n)).eval_at(1) == Coeff(testing::fibonacci(2 * n)));
    // Cone over a star with L leaves: 2^(L-1) (L+2).
    const std::size_t leaves = n - 1;
    if (leaves >= 1) CHECK(cone_f(star_graph(n)).eval_at(1) == (Coeff{1} << (leaves - 1)) * Coeff(leaves + 2));
  }
}

TEST_CASE("definitions against the subset oracle") {
  SeededRng rng(kDefaultSeed);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_multigraph(rng, 6, 8);
    CHECK(cone_f(g) == subset_tutte_at_x1(cone(g).graph));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      CHECK(cone_g(g, v) == oracle_g(g, v));
      CHECK(cone_h(g, v) == oracle_h(g, v));
    }
  }
}

TEST_CASE("f = g + h with non-negative parts") {
  SeededRng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_multigraph(rng, 7, 10);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto t = cone_triple(g, v);
      CHECK(t.f == t.g + t.h);
      CHECK_FALSE(t.g.has_negative_coefficient());
      CHECK_FALSE(t.h.has_negative_coefficient());
    }
  }
}

TEST_CASE("h is multiplicative and f obeys the one-sum formula") {
  SeededRng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 500; ++trial) {
    auto g1 = random_multigraph(rng, 6, 8);
    auto g2 = random_multigraph(rng, 6, 8);
    auto v1 = static_cast<VertexId>(rng.below(g1.vertex_count()));
    auto v2 = static_cast<VertexId>(rng.below(g2.vertex_count()));
    auto s = one_sum(g1, v1, g2, v2);
    CHECK(cone_h(s.graph, s.glued) == cone_h(g1, v1) * cone_h(g2, v2));
    CHECK(cone_f(s.graph) == cone_f(g1) * cone_f(g2) - kY * cone_g(g1, v1) * cone_g(g2, v2));
  }
}

TEST_CASE("edge recursions at v") {
  SeededRng rng(kDefaultSeed + 3);
  std::size_t checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_multigraph(rng, 6, 9);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = g.edge(e);
      if (a == b) continue;
      auto del = delete_edge(g, e);
      auto con = contract_edge(g, e);
      const VertexId merged = id_after_contraction(a, a, b);
      CHECK(cone_f(g) == cone_f(del) + cone_f(con) + kY * cone_h(con, merged));
      CHECK(cone_g(g, a) == cone_g(con, merged) + cone_h(con, merged) + cone_g(del, a));
      CHECK(cone_g(g, b) == cone_g(con, merged) + cone_h(con, merged) + cone_g(del, b));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}
