#include "conetutte/trees.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

namespace conetutte {

namespace {

void require_tree(const Multigraph& g) {
  if (!g.is_tree() || g.loop_count() != 0) throw InvalidArgument("input is not a tree");
}

std::vector<std::vector<VertexId>> adjacency(const Multigraph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

TreeCode encode(const std::vector<std::vector<VertexId>>& adj, VertexId v, VertexId parent) {
  std::vector<TreeCode> children;
  for (VertexId w : adj[v])
    if (w != parent) children.push_back(encode(adj, w, v));
  std::sort(children.begin(), children.end());
  TreeCode out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<VertexId> centers(const std::vector<std::vector<VertexId>>& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (VertexId v : layer)
      for (VertexId w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

TreeCode rooted_code(const Multigraph& tree, VertexId root) {
  require_tree(tree);
  if (root >= tree.vertex_count()) throw InvalidArgument("root out of range");
  return encode(adjacency(tree), root, UINT32_MAX);
}

TreeCode canonical_code(const Multigraph& tree) {
  require_tree(tree);
  auto adj = adjacency(tree);
  TreeCode best;
  for (VertexId c : centers(adj)) {
    auto code = encode(adj, c, UINT32_MAX);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Multigraph tree_from_code(const TreeCode& code) {
  std::vector<Edge> edges;
  std::vector<VertexId> stack;
  VertexId next = 0;
  for (char ch : code) {
    if (ch == '(') {
      if (stack.empty() && next != 0) throw ParseError("tree code has more than one root");
      VertexId v = next++;
      if (!stack.empty()) edges.push_back({stack.back(), v});
      stack.push_back(v);
    } else if (ch == ')') {
      if (stack.empty()) throw ParseError("unbalanced tree code");
      stack.pop_back();
    } else {
      throw ParseError("unexpected character in tree code");
    }
  }
  if (!stack.empty() || next == 0) throw ParseError("unbalanced tree code");
  return Multigraph(next, std::move(edges));
}

CanonicalTree CanonicalTree::from_graph(const Multigraph& tree) {
  auto code = canonical_code(tree);
  return {tree_from_code(code), std::move(code)};
}

std::size_t max_tree_vertices() {
  if (const char* env = std::getenv("CONETUTTE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxTreeVertices;
}

std::vector<CanonicalTree> enumerate_trees(std::size_t n) {
  if (n < 1 || n > max_tree_vertices())
    throw InvalidArgument("tree size " + std::to_string(n) + " outside 1.." + std::to_string(max_tree_vertices()));
  std::set<TreeCode> level{"()"};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<TreeCode> grown;
    for (const auto& code : level) {
      Multigraph t = tree_from_code(code);
      for (VertexId v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, static_cast<VertexId>(t.vertex_count())});
        grown.insert(canonical_code(Multigraph(t.vertex_count() + 1, std::move(edges))));
      }
    }
    level = std::move(grown);
  }
  std::vector<CanonicalTree> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back({tree_from_code(code), code});
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VertexId> tree_path(const Multigraph& tree, VertexId a, VertexId b) {
  require_tree(tree);
  if (a >= tree.vertex_count() || b >= tree.vertex_count()) throw InvalidArgument("vertex out of range");
  auto adj = adjacency(tree);
  std::vector<VertexId> parent(tree.vertex_count(), UINT32_MAX);
  std::vector<VertexId> todo{a};
  parent[a] = a;
  while (!todo.empty()) {
    VertexId v = todo.back();
    todo.pop_back();
    for (VertexId w : adj[v])
      if (parent[w] == UINT32_MAX) {
        parent[w] = v;
        todo.push_back(w);
      }
  }
  std::vector<VertexId> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_shift_site(const Multigraph& tree, const ShiftSite& site) {
  if (site.v1 == site.vk) return false;
  if (site.v1 >= tree.vertex_count() || site.vk >= tree.vertex_count()) return false;
  auto path = tree_path(tree, site.v1, site.vk);
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (tree.degree(path[i]) != 2) return false;
  return true;
}

std::vector<ShiftSite> shift_sites(const Multigraph& tree) {
  require_tree(tree);
  const auto n = static_cast<VertexId>(tree.vertex_count());
  auto adj = adjacency(tree);
  // Walk outward from each vertex through degree-2 vertices only.
  std::vector<ShiftSite> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId first : adj[a]) {
      VertexId prev = a, cur = first;
      while (true) {
        if (a < cur) out.push_back({a, cur});
        if (adj[cur].size() != 2) break;
        VertexId nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ShiftSite& x, const ShiftSite& y) {
    return std::tie(x.v1, x.vk) < std::tie(y.v1, y.vk);
  });
  return out;
}

ShiftDecomposition decompose(const Multigraph& tree, const ShiftSite& site) {
  if (!is_shift_site(tree, site)) throw InvalidArgument("not a valid shift site");
  auto path = tree_path(tree, site.v1, site.vk);
  const std::size_t n = tree.vertex_count();

  std::vector<bool> interior(n, false);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) interior[path[i]] = true;
  // Path edges are exactly the edges between consecutive path vertices; in
  // a tree there is one such edge per consecutive pair.
  auto on_path = [&](const Edge& e) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if ((e.u == path[i] && e.v == path[i + 1]) || (e.v == path[i] && e.u == path[i + 1])) return true;
    return false;
  };
  std::vector<Edge> rest;
  for (const auto& e : tree.edges())
    if (!on_path(e) && !interior[e.u] && !interior[e.v]) rest.push_back(e);
  Multigraph remainder(n, std::move(rest));
  auto label = remainder.component_labels();

  auto extract = [&](VertexId root) {
    std::vector<VertexId> index(n, UINT32_MAX);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v)
      if (label[v] == label[root] && !interior[v]) index[v] = next++;
    std::vector<Edge> edges;
    for (const auto& e : remainder.edges())
      if (index[e.u] != UINT32_MAX) edges.push_back({index[e.u], index[e.v]});
    return RootedGraph{Multigraph(next, std::move(edges)), index[root]};
  };

  return {extract(site.v1), extract(site.vk), path.size(), path_graph(path.size())};
}

Multigraph shifted_tree(const Multigraph& tree, const ShiftSite& site) {
  auto d = decompose(tree, site);
  auto glued = one_sum(d.h1.graph, d.h1.root, d.h2.graph, d.h2.root);
  return one_sum(glued.graph, glued.glued, d.pk, static_cast<VertexId>(d.k - 1)).graph;
}

CanonicalTree apply_shift(const Multigraph& tree, const ShiftSite& site) {
  return CanonicalTree::from_graph(shifted_tree(tree, site));
}

}  // namespace conetutte
