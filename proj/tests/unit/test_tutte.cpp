#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "conetutte/tutte.hpp"
#include "oracles.hpp"

using namespace conetutte;
using conetutte::testing::subset_tutte_at_x1;

namespace {

BivarPolynomial bivar(std::initializer_list<std::tuple<int, int, Coeff>> terms) {
  BivarPolynomial p;
  for (auto [x, y, c] : terms) p.add_term(x, y, c);
  return p;
}

Multigraph k4() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

const TutteOptions kNoMemo{false};

}  // namespace

TEST_CASE("T(1,y) on small graphs") {
  CHECK(tutte_at_x1(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})) == IntPolynomial{2, 1});
  CHECK(tutte_at_x1(cycle_graph(4)) == IntPolynomial{3, 1});
  CHECK(tutte_at_x1(Multigraph(2, {{0, 1}, {0, 1}})) == IntPolynomial{1, 1});
  CHECK(tutte_at_x1(Multigraph(1, {{0, 0}})) == IntPolynomial{0, 1});
  CHECK(tutte_at_x1(Multigraph(1, {{0, 0}, {0, 0}})) == IntPolynomial{0, 0, 1});
  CHECK(tutte_at_x1(path_graph(6)) == IntPolynomial{1});
  CHECK(tutte_at_x1(Multigraph(0)) == IntPolynomial{1});
  CHECK(tutte_at_x1(Multigraph(5)) == IntPolynomial{1});
  // K4: x^3+3x^2+2x+4xy+2y+3y^2+y^3 at x = 1.
  CHECK(tutte_at_x1(k4()) == IntPolynomial{6, 6, 3, 1});
  // Disconnected graphs multiply over components.
  Multigraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(tutte_at_x1(two) == IntPolynomial{4, 4, 1});
}

TEST_CASE("subset-expansion oracle on known polynomials") {
  CHECK(tutte_subset_oracle(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})) == bivar({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(tutte_subset_oracle(Multigraph(2, {{0, 1}})) == bivar({{1, 0, 1}}));
  CHECK(tutte_subset_oracle(Multigraph(1, {{0, 0}})) == bivar({{0, 1, 1}}));
  CHECK(tutte_subset_oracle(Multigraph(2, {{0, 1}, {0, 1}})) == bivar({{1, 0, 1}, {0, 1, 1}}));
  CHECK(tutte_subset_oracle(Multigraph(4)) == bivar({{0, 0, 1}}));
  CHECK(tutte_subset_oracle(k4()) ==
        bivar({{3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1}}));
  Multigraph big(2, std::vector<Edge>(kSubsetOracleMaxEdges + 1, Edge{0, 1}));
  CHECK_THROWS_AS(tutte_subset_oracle(big), InvalidArgument);
}

TEST_CASE("subset oracle evaluations count subsets") {
  // T(2,2) = 2^m for every graph.
  SeededRng rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_multigraph(rng, 6, 10);
    CHECK(tutte_subset_oracle(g).eval(2, 2) == (Coeff{1} << g.edge_count()));
  }
}

TEST_CASE("matrix-tree examples") {
  CHECK(spanning_tree_count(k4()) == 16);
  CHECK(spanning_tree_count(cycle_graph(5)) == 5);
  CHECK(spanning_tree_count(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})) == 3);
  CHECK(spanning_tree_count(Multigraph(2, {{0, 1}, {1, 1}})) == 1);
  CHECK(spanning_tree_count(single_vertex()) == 1);
  CHECK_THROWS_AS(spanning_tree_count(Multigraph(2)), InvalidArgument);
  // Fans: F(2n).
  for (unsigned n = 1; n <= 12; ++n)
    CHECK(spanning_tree_count(cone(path_graph(n)).graph) == Coeff(testing::fibonacci(2 * n)));
}

TEST_CASE("recursion agrees with the subset oracle, matrix-tree and reordering") {
  SeededRng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_multigraph(rng, 7, 12);
    auto t = tutte_at_x1(g);
    CHECK(t == subset_tutte_at_x1(g));
    CHECK(t == tutte_at_x1(g, kNoMemo));
    CHECK(t == tutte_at_x1(reverse_edges(g)));
    CHECK(t == tutte_at_x1(testing::random_relabel(rng, g)));
    CHECK_FALSE(t.has_negative_coefficient());
    CHECK(t.degree() == static_cast<int>(g.nullity()));
    if (g.is_connected()) CHECK(t.eval_at(1) == spanning_tree_count(g));
  }
}

TEST_CASE("one-sum multiplicativity of the full polynomial") {
  SeededRng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 300; ++trial) {
    auto g1 = random_multigraph(rng, 5, 8);
    auto g2 = random_multigraph(rng, 5, 8);
    auto v1 = static_cast<VertexId>(rng.below(g1.vertex_count()));
    auto v2 = static_cast<VertexId>(rng.below(g2.vertex_count()));
    auto s = one_sum(g1, v1, g2, v2).graph;
    CHECK(tutte_subset_oracle(s) == tutte_subset_oracle(g1) * tutte_subset_oracle(g2));
  }
}

TEST_CASE("memoization cache") {
  clear_tutte_cache();
  CHECK(tutte_cache_size() == 0);
  auto w = cone(cycle_graph(7)).graph;
  auto memo = tutte_at_x1(w);
  CHECK(tutte_cache_size() > 0);
  CHECK(memo == tutte_at_x1(w, kNoMemo));
  // Wheels: L(2n) - 2 spanning trees.
  CHECK(memo.eval_at(1) == 841);
  clear_tutte_cache();
  CHECK(tutte_cache_size() == 0);
}

TEST_CASE("memo keys identify graphs up to isomorphism") {
  SeededRng rng(kDefaultSeed + 3);
  std::map<std::string, IntPolynomial> seen;
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = random_connected_multigraph(rng, 5, 7);
    auto key = memo_key(g);
    CHECK(key == memo_key(g));
    auto t = tutte_at_x1(g, kNoMemo);
    auto [it, fresh] = seen.emplace(key, t);
    if (!fresh) CHECK(it->second == t);
  }
  // Relabeled copies of a graph with distinct degrees share a key.
  Multigraph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
  std::vector<VertexId> perm{3, 1, 0, 2};
  CHECK(memo_key(g) == memo_key(relabel(g, perm)));
  CHECK(memo_key(g) != memo_key(path_graph(4)));
}
