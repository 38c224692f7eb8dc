#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "conetutte/graph.hpp"
#include "oracles.hpp"

using namespace conetutte;

namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Sorted multiset of normalized edges; equal for identical graphs up to
// edge order.
std::vector<std::pair<VertexId, VertexId>> edge_multiset(const Multigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : g.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("basic queries") {
  Multigraph g(4, {{0, 1}, {1, 1}, {1, 2}, {1, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(1) == 5);
  CHECK(g.degree(3) == 0);
  CHECK(g.loop_count() == 1);
  CHECK(g.component_count() == 2);
  CHECK_FALSE(g.is_connected());
  CHECK(g.leaves() == std::vector<VertexId>{0});
  CHECK(g.has_neighbor(0));
  CHECK_FALSE(g.has_neighbor(3));
  CHECK_FALSE(g.is_tree());
  CHECK(g.nullity() == 2);  // 4 - 4 + 2

  Multigraph looped(1, {{0, 0}});
  CHECK_FALSE(looped.has_neighbor(0));
  CHECK(looped.degree(0) == 2);

  CHECK(Multigraph(0).is_connected());
  CHECK(single_vertex().is_tree());
  CHECK(path_graph(5).is_tree());
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(g.edge(9), InvalidArgument);
}

TEST_CASE("edge-list parsing") {
  auto g = parse_edge_list("# a triangle\n0 1\n1 2\n\n  2 0  \n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(2) == Edge{2, 0});

  auto iso = parse_edge_list("n 5\n0 1\n");
  CHECK(iso.vertex_count() == 5);
  CHECK(iso.component_count() == 4);

  CHECK(parse_edge_list("n 1\n").vertex_count() == 1);
  CHECK(parse_edge_list("3 3\n").vertex_count() == 4);

  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n x\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), Error);
}

TEST_CASE("serialization round trips") {
  SeededRng rng(kDefaultSeed);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_multigraph(rng, 7, 10);
    auto back = parse_edge_list(to_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));
    auto j = graph_from_json(to_json(g));
    CHECK(j.vertex_count() == g.vertex_count());
    CHECK(std::equal(j.edges().begin(), j.edges().end(), g.edges().begin(), g.edges().end()));
  }
  CHECK(to_json(path_graph(3)) == R"({"edges":[[0,1],[1,2]],"n":3})");
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), ParseError);
  CHECK_THROWS_AS(graph_from_json("not json"), ParseError);
}

TEST_CASE("deletion and contraction examples") {
  auto t = triangle();
  auto d = delete_edge(t, 0);
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 2);
  CHECK(d.edge(0) == Edge{1, 2});

  // Contracting 0-1 merges into 0; vertex 2 becomes 1.
  auto c = contract_edge(t, 0);
  CHECK(c.vertex_count() == 2);
  CHECK(edge_multiset(c) == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 1}});

  // Contracting one of two parallel edges leaves a loop.
  Multigraph par(2, {{0, 1}, {1, 0}});
  auto l = contract_edge(par, 1);
  CHECK(l.vertex_count() == 1);
  CHECK(l.loop_count() == 1);

  // The smaller endpoint id survives; higher ids shift down.
  Multigraph p(4, {{0, 1}, {2, 1}, {2, 3}});
  auto pc = contract_edge(p, 1);
  CHECK(edge_multiset(pc) == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
  CHECK(id_after_contraction(2, 1, 2) == 1);
  CHECK(id_after_contraction(3, 1, 2) == 2);
  CHECK(id_after_contraction(0, 1, 2) == 0);

  CHECK_THROWS_AS(contract_edge(Multigraph(1, {{0, 0}}), 0), InvalidArgument);
  CHECK_THROWS_AS(delete_edge(t, 3), InvalidArgument);
}

TEST_CASE("edge classification examples") {
  Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}});
  CHECK(classify_edge(g, 0) == EdgeClass::Ordinary);
  CHECK(classify_edge(g, 3) == EdgeClass::Bridge);
  CHECK(classify_edge(g, 4) == EdgeClass::Loop);
  CHECK(find_bridges(g) == std::vector<bool>{false, false, false, true, false});
  Multigraph par(2, {{0, 1}, {0, 1}});
  CHECK(classify_edge(par, 0) == EdgeClass::Ordinary);
  CHECK(std::string(to_string(EdgeClass::Bridge)) == "bridge");
}

TEST_CASE("bridges are exactly the edges whose deletion disconnects") {
  SeededRng rng(kDefaultSeed);
  std::size_t bridges = 0, ordinary = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto g = random_multigraph(rng, 7, 8);
    auto fast = find_bridges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto cls = classify_edge(g, e);
      auto after = delete_edge(g, e).component_count();
      if (g.edge(e).is_loop()) {
        CHECK(cls == EdgeClass::Loop);
      } else if (cls == EdgeClass::Bridge) {
        CHECK(after == g.component_count() + 1);
        ++bridges;
      } else {
        CHECK(cls == EdgeClass::Ordinary);
        CHECK(after == g.component_count());
        ++ordinary;
      }
      CHECK(fast[e] == (cls == EdgeClass::Bridge));
    }
  }
  CHECK(bridges > 0);
  CHECK(ordinary > 0);
}

TEST_CASE("contraction drops one vertex and one edge") {
  SeededRng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 2000; ++trial) {
    auto g = random_multigraph(rng, 7, 8);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).is_loop()) continue;
      auto c = contract_edge(g, e);
      CHECK(c.vertex_count() == g.vertex_count() - 1);
      CHECK(c.edge_count() == g.edge_count() - 1);
      CHECK(c.loop_count() >= g.loop_count());
      CHECK(c.component_count() == g.component_count());
    }
  }
}

TEST_CASE("cone examples") {
  auto c = cone(path_graph(3));
  CHECK(c.apex == 3);
  CHECK(c.graph.vertex_count() == 4);
  CHECK(c.graph.edge_count() == 5);
  CHECK(c.spokes == std::vector<EdgeId>{2, 3, 4});
  CHECK(c.graph.edge(c.spokes[1]) == Edge{1, 3});
  CHECK(c.graph.degree(c.apex) == 3);

  auto e = cone(Multigraph(0));
  CHECK(e.graph.vertex_count() == 1);
  CHECK(e.spokes.empty());
}

TEST_CASE("cones are connected and a spoke is a bridge iff its vertex has no neighbor") {
  SeededRng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 2000; ++trial) {
    auto g = random_multigraph(rng, 7, 8);
    auto c = cone(g);
    CHECK(c.graph.is_connected());
    auto bridges = find_bridges(c.graph);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(bridges[c.spokes[v]] == !g.has_neighbor(v));
  }
}

TEST_CASE("one-sum examples") {
  auto s = one_sum(path_graph(2), 1, path_graph(3), 0);
  CHECK(s.glued == 1);
  CHECK(s.graph.vertex_count() == 4);
  CHECK(edge_multiset(s.graph) == edge_multiset(path_graph(4)));

  auto mid = one_sum(path_graph(2), 0, path_graph(3), 1);
  CHECK(mid.graph.degree(mid.glued) == 3);
  CHECK(mid.graph.is_tree());
  CHECK_THROWS_AS(one_sum(path_graph(2), 5, path_graph(2), 0), InvalidArgument);
}

TEST_CASE("one-sum with a single vertex returns the same graph") {
  SeededRng rng(kDefaultSeed + 3);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_multigraph(rng, 7, 8);
    auto v = static_cast<VertexId>(rng.below(g.vertex_count()));
    auto s = one_sum(g, v, single_vertex(), 0);
    CHECK(s.glued == v);
    CHECK(s.graph.vertex_count() == g.vertex_count());
    CHECK(std::equal(s.graph.edges().begin(), s.graph.edges().end(), g.edges().begin(), g.edges().end()));
    auto t = one_sum(single_vertex(), 0, g, v);
    CHECK(t.graph.vertex_count() == g.vertex_count());
    CHECK(t.graph.edge_count() == g.edge_count());
    CHECK(t.graph.degree(t.glued) == g.degree(v));
  }
}

TEST_CASE("families") {
  CHECK(edge_multiset(star_graph(4)) == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(cycle_graph(4).nullity() == 1);
  CHECK(cycle_graph(1).loop_count() == 1);
  const std::size_t legs[] = {2, 1};
  auto sp = spider_graph(legs);
  CHECK(sp.vertex_count() == 4);
  CHECK(sp.is_tree());
  CHECK(sp.leaves().size() == 2);

  std::vector<VertexId> perm{2, 0, 1};
  auto r = relabel(path_graph(3), perm);
  CHECK(r.edge(0) == Edge{2, 0});
  std::vector<VertexId> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(path_graph(3), bad), InvalidArgument);
  CHECK(reverse_edges(path_graph(3)).edge(0) == Edge{1, 2});
}
