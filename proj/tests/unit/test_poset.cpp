#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "conetutte/poset.hpp"
#include "oracles.hpp"

using namespace conetutte;
using namespace conetutte::testing;

namespace {

std::size_t idx(const HasseDiagram& d, const Multigraph& t) { return d.index_of(canonical_code(t)).value(); }

// Covers from brute-force sites and the hand-built shift.
std::set<std::pair<std::size_t, std::size_t>> oracle_covers(const HasseDiagram& d) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (const auto& site : brute_force_sites(d.nodes[i].graph)) {
      auto j = idx(d, shift_by_hand(d.nodes[i].graph, site));
      if (j != i) out.insert({i, j});
    }
  return out;
}

// Shortest and longest directed path lengths from a to b in the cover DAG.
std::pair<std::size_t, std::size_t> chain_lengths(const HasseDiagram& d, std::size_t a, std::size_t b) {
  const std::size_t inf = SIZE_MAX;
  std::vector<std::size_t> lo(d.nodes.size(), inf), hi(d.nodes.size(), 0);
  lo[a] = hi[a] = 0;
  // Leaf count is a topological order.
  std::vector<std::size_t> order(d.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return d.nodes[x].leaf_count() < d.nodes[y].leaf_count(); });
  for (auto u : order) {
    if (lo[u] == inf) continue;
    for (auto [x, y] : d.covers)
      if (x == u) {
        lo[y] = std::min(lo[y], lo[u] + 1);
        hi[y] = std::max(hi[y], hi[u] + 1);
      }
  }
  return {lo[b], hi[b]};
}

}  // namespace

TEST_CASE("small posets") {
  auto d3 = build_poset(3);
  CHECK(d3.nodes.size() == 1);
  CHECK(d3.covers.empty());

  auto d4 = build_poset(4);
  REQUIRE(d4.nodes.size() == 2);
  CHECK(d4.covers == std::vector<std::pair<std::size_t, std::size_t>>{{idx(d4, path_graph(4)), idx(d4, star_graph(4))}});

  auto d5 = build_poset(5);
  CHECK(d5.covers.size() == 2);
  const std::size_t legs[] = {2, 1, 1};
  auto mid = idx(d5, spider_graph(legs));
  CHECK(leq(d5, idx(d5, path_graph(5)), mid));
  CHECK(leq(d5, mid, idx(d5, star_graph(5))));
  CHECK_FALSE(leq(d5, idx(d5, star_graph(5)), mid));
  CHECK(leq(d5, mid, mid));

  CHECK_FALSE(d5.index_of("(").has_value());
  CHECK_THROWS_AS(build_poset(0), InvalidArgument);
}

TEST_CASE("cover counts") {
  // Regression constants recorded after the first verified build.
  const std::size_t expected[] = {0, 0, 0, 1, 2, 7, 20, 57, 157};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(build_poset(n).covers.size() == expected[n - 1]);
}

TEST_CASE("covers agree with an independently built shift relation") {
  for (std::size_t n = 3; n <= 10; ++n) {
    auto d = build_poset(n);
    std::set<std::pair<std::size_t, std::size_t>> ours(d.covers.begin(), d.covers.end());
    CHECK_MESSAGE(ours == oracle_covers(d), "n=" << n);
    CHECK(ours.size() == d.covers.size());
  }
}

TEST_CASE("grading, reduction and extremes") {
  for (std::size_t n = 3; n <= 10; ++n) {
    auto d = build_poset(n);
    for (auto [a, b] : d.covers) CHECK(d.nodes[b].leaf_count() == d.nodes[a].leaf_count() + 1);
    CHECK(is_acyclic(d));
    CHECK(is_transitively_reduced(d));

    auto ex = extremes(d);
    CHECK(ex.minimals == std::vector<std::size_t>{idx(d, path_graph(n))});
    CHECK(ex.maximals == std::vector<std::size_t>{idx(d, star_graph(n))});

    auto closure = order_closure(d);
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      CHECK(closure[idx(d, path_graph(n))][i]);
      CHECK(closure[i][idx(d, star_graph(n))]);
    }
    // Every chain from path to star has n-3 covers.
    auto [lo, hi] = chain_lengths(d, idx(d, path_graph(n)), idx(d, star_graph(n)));
    CHECK(lo == n - 3);
    CHECK(hi == n - 3);
  }
}

TEST_CASE("transitive reduction check detects a shortcut") {
  auto d = build_poset(5);
  d.covers.push_back({idx(d, path_graph(5)), idx(d, star_graph(5))});
  std::sort(d.covers.begin(), d.covers.end());
  CHECK_FALSE(is_transitively_reduced(d));
  d.covers.push_back({idx(d, star_graph(5)), idx(d, path_graph(5))});
  CHECK_FALSE(is_acyclic(d));
}

TEST_CASE("parallel build is identical to sequential") {
  for (std::size_t n : {7u, 9u}) {
    auto a = build_poset(n, 1);
    auto b = build_poset(n, 4);
    CHECK(a.covers == b.covers);
    CHECK(export_dot(a) == export_dot(b));
  }
}

TEST_CASE("exports") {
  auto d = build_poset(4);
  auto dot = export_dot(d);
  CHECK(dot == export_dot(build_poset(4)));
  CHECK(dot.rfind("digraph csikvari_n4 {\n  rankdir=BT;\n", 0) == 0);
  CHECK(dot.find("leaves=2") != std::string::npos);
  CHECK(dot.find("leaves=3") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);

  auto j = nlohmann::json::parse(export_json(build_poset(7)));
  CHECK(j["n"] == 7);
  CHECK(j["trees"].size() == 11);
  CHECK(j["codes"].size() == 11);
  CHECK(j["covers"].size() == 20);
  CHECK(j["trees"][0].size() == 6);
}
