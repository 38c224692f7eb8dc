#include "conetutte/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace conetutte {

namespace {

void check_vertex(const Multigraph& g, VertexId v) {
  if (v >= g.vertex_count())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(g.vertex_count()) + ")");
}

void check_edge(const Multigraph& g, EdgeId e) {
  if (e >= g.edge_count())
    throw InvalidArgument("edge " + std::to_string(e) + " out of range (m=" + std::to_string(g.edge_count()) + ")");
}

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Loop: return "loop";
    case EdgeClass::Bridge: return "bridge";
    case EdgeClass::Ordinary: return "ordinary";
  }
  return "?";
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_)
      throw InvalidArgument("edge endpoint out of range (n=" + std::to_string(vertex_count_) + ")");
  }
}

const Edge& Multigraph::edge(EdgeId e) const {
  check_edge(*this, e);
  return edges_[e];
}

std::size_t Multigraph::degree(VertexId v) const {
  check_vertex(*this, v);
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<VertexId> Multigraph::leaves() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (deg[v] == 1) out.push_back(v);
  return out;
}

std::vector<std::uint32_t> Multigraph::component_labels() const {
  DisjointSets ds(vertex_count_);
  for (const auto& e : edges_) ds.unite(e.u, e.v);
  std::vector<std::uint32_t> label(vertex_count_);
  std::vector<std::uint32_t> root_label(vertex_count_, UINT32_MAX);
  std::uint32_t next = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    auto r = ds.find(v);
    if (root_label[r] == UINT32_MAX) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

std::size_t Multigraph::component_count() const {
  DisjointSets ds(vertex_count_);
  std::size_t count = vertex_count_;
  for (const auto& e : edges_) count -= ds.unite(e.u, e.v);
  return count;
}

bool Multigraph::is_connected() const { return component_count() <= 1; }

std::size_t Multigraph::nullity() const { return edges_.size() + component_count() - vertex_count_; }

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

bool Multigraph::has_neighbor(VertexId v) const {
  check_vertex(*this, v);
  return std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return !e.is_loop() && (e.u == v || e.v == v); });
}

bool Multigraph::is_tree() const {
  return vertex_count_ >= 1 && edges_.size() + 1 == vertex_count_ && is_connected();
}

// ---------------------------------------------------------------------------

Multigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  std::size_t max_seen = 0;
  bool any = false;
  long long declared = -1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    auto where = [&] { return " on line " + std::to_string(lineno); };
    if (tok.size() != 2) throw ParseError("expected two tokens" + where());
    if (tok[0] == "n") {
      std::size_t used = 0;
      long long n = -1;
      try {
        n = std::stoll(tok[1], &used);
      } catch (const std::exception&) {
        throw ParseError("malformed vertex count '" + tok[1] + "'" + where());
      }
      if (used != tok[1].size() || n < 0) throw ParseError("malformed vertex count '" + tok[1] + "'" + where());
      declared = n;
      continue;
    }
    VertexId ends[2];
    for (int i = 0; i < 2; ++i) {
      const auto& t = tok[i];
      if (!t.empty() && t[0] == '-') throw ParseError("negative vertex id '" + t + "'" + where());
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 9)
        throw ParseError("malformed vertex id '" + t + "'" + where());
      ends[i] = static_cast<VertexId>(std::stoul(t));
      max_seen = std::max<std::size_t>(max_seen, ends[i]);
    }
    edges.push_back({ends[0], ends[1]});
    any = true;
  }
  std::size_t n = any ? max_seen + 1 : 0;
  if (declared >= 0) {
    if (static_cast<std::size_t>(declared) < n) throw ParseError("declared vertex count smaller than an edge endpoint");
    n = static_cast<std::size_t>(declared);
  }
  return Multigraph(n, std::move(edges));
}

Multigraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::string to_edge_list(const Multigraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string to_json(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}}.dump();
}

Multigraph graph_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
    return Multigraph(j.at("n").get<std::size_t>(), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad graph JSON: ") + ex.what());
  }
}

// ---------------------------------------------------------------------------

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  check_edge(g, e);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    if (i != e) edges.push_back(g.edges()[i]);
  return Multigraph(g.vertex_count(), std::move(edges));
}

VertexId id_after_contraction(VertexId w, VertexId a, VertexId b) {
  VertexId lo = std::min(a, b), hi = std::max(a, b);
  if (w == hi) return lo;
  return w > hi ? w - 1 : w;
}

Multigraph contract_edge(const Multigraph& g, EdgeId e) {
  check_edge(g, e);
  const Edge pivot = g.edges()[e];
  if (pivot.is_loop()) throw InvalidArgument("cannot contract a loop");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    const Edge& x = g.edges()[i];
    edges.push_back({id_after_contraction(x.u, pivot.u, pivot.v), id_after_contraction(x.v, pivot.u, pivot.v)});
  }
  return Multigraph(g.vertex_count() - 1, std::move(edges));
}

std::vector<bool> find_bridges(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const auto edges = g.edges();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId i = 0; i < edges.size(); ++i) {
    if (edges[i].is_loop()) continue;
    adj[edges[i].u].push_back({edges[i].v, i});
    adj[edges[i].v].push_back({edges[i].u, i});
  }
  std::vector<bool> bridge(edges.size(), false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, UINT32_MAX, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, id] = adj[f.v][f.next++];
        if (id == f.via) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) bridge[done.via] = true;
        }
      }
    }
  }
  return bridge;
}

EdgeClass classify_edge(const Multigraph& g, EdgeId e) {
  const Edge& x = g.edge(e);
  if (x.is_loop()) return EdgeClass::Loop;
  // Is x.v still reachable from x.u without e?
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    const auto& y = g.edges()[i];
    adj[y.u].push_back(y.v);
    adj[y.v].push_back(y.u);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> todo{x.u};
  seen[x.u] = true;
  while (!todo.empty()) {
    VertexId v = todo.back();
    todo.pop_back();
    if (v == x.v) return EdgeClass::Ordinary;
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
  }
  return EdgeClass::Bridge;
}

ConeResult cone(const Multigraph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<EdgeId> spokes(n);
  for (VertexId v = 0; v < n; ++v) {
    spokes[v] = static_cast<EdgeId>(edges.size());
    edges.push_back({v, n});
  }
  return {Multigraph(n + 1, std::move(edges)), n, std::move(spokes)};
}

OneSumResult one_sum(const Multigraph& g1, VertexId v1, const Multigraph& g2, VertexId v2) {
  check_vertex(g1, v1);
  check_vertex(g2, v2);
  const auto n1 = static_cast<VertexId>(g1.vertex_count());
  auto map2 = [&](VertexId w) -> VertexId {
    if (w == v2) return v1;
    return n1 + (w < v2 ? w : w - 1);
  };
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) edges.push_back({map2(e.u), map2(e.v)});
  return {Multigraph(g1.vertex_count() + g2.vertex_count() - 1, std::move(edges)), v1};
}

Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.vertex_count()) throw InvalidArgument("permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (VertexId p : perm) {
    if (p >= perm.size() || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph reverse_edges(const Multigraph& g) {
  std::vector<Edge> edges(g.edges().rbegin(), g.edges().rend());
  return Multigraph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------

Multigraph single_vertex() { return Multigraph(1); }

Multigraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, std::move(edges));
}

Multigraph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n; ++i) edges.push_back({0, i});
  return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("cycle needs at least one vertex");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return Multigraph(n, std::move(edges));
}

Multigraph spider_graph(std::span<const std::size_t> legs) {
  std::vector<Edge> edges;
  VertexId next = 1;
  for (std::size_t len : legs) {
    VertexId prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Multigraph(next, std::move(edges));
}

}  // namespace conetutte
