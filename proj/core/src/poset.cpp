#include "conetutte/poset.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "conetutte/parallel.hpp"

namespace conetutte {

std::optional<std::size_t> HasseDiagram::index_of(const TreeCode& code) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), code,
                             [](const CanonicalTree& t, const TreeCode& c) { return t.code < c; });
  if (it == nodes.end() || it->code != code) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

HasseDiagram build_poset(std::size_t n, unsigned jobs) {
  HasseDiagram d;
  d.n = n;
  d.nodes = enumerate_trees(n);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(d.nodes.size());
  parallel_for_index(d.nodes.size(), jobs, [&](std::size_t i) {
    const auto& t = d.nodes[i];
    for (const auto& site : shift_sites(t.graph)) {
      auto image = apply_shift(t.graph, site);
      if (image.code == t.code) continue;
      found[i].emplace_back(i, *d.index_of(image.code));
    }
  });
  for (auto& f : found) d.covers.insert(d.covers.end(), f.begin(), f.end());
  std::sort(d.covers.begin(), d.covers.end());
  d.covers.erase(std::unique(d.covers.begin(), d.covers.end()), d.covers.end());
  return d;
}

std::vector<std::vector<bool>> order_closure(const HasseDiagram& d) {
  const std::size_t m = d.nodes.size();
  std::vector<std::vector<std::size_t>> up(m);
  for (auto [a, b] : d.covers) up[a].push_back(b);
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> todo{s};
    reach[s][s] = true;
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      for (auto w : up[v])
        if (!reach[s][w]) {
          reach[s][w] = true;
          todo.push_back(w);
        }
    }
  }
  return reach;
}

bool leq(const HasseDiagram& d, std::size_t a, std::size_t b) {
  if (a >= d.nodes.size() || b >= d.nodes.size()) throw InvalidArgument("poset index out of range");
  std::vector<bool> seen(d.nodes.size(), false);
  std::vector<std::size_t> todo{a};
  seen[a] = true;
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    if (v == b) return true;
    for (auto [lo, hi] : d.covers)
      if (lo == v && !seen[hi]) {
        seen[hi] = true;
        todo.push_back(hi);
      }
  }
  return false;
}

Extremes extremes(const HasseDiagram& d) {
  std::vector<bool> has_in(d.nodes.size(), false), has_out(d.nodes.size(), false);
  for (auto [a, b] : d.covers) {
    has_out[a] = true;
    has_in[b] = true;
  }
  Extremes e;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (!has_in[i]) e.minimals.push_back(i);
    if (!has_out[i]) e.maximals.push_back(i);
  }
  return e;
}

bool is_acyclic(const HasseDiagram& d) {
  auto reach = order_closure(d);
  for (auto [a, b] : d.covers)
    if (reach[b][a]) return false;
  return true;
}

bool is_transitively_reduced(const HasseDiagram& d) {
  auto reach = order_closure(d);
  for (auto [a, b] : d.covers) {
    for (std::size_t c = 0; c < d.nodes.size(); ++c) {
      if (c == a || c == b) continue;
      if (reach[a][c] && reach[c][b]) return false;
    }
  }
  return true;
}

std::string export_dot(const HasseDiagram& d) {
  std::string out = "digraph csikvari_n" + std::to_string(d.n) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out += "  t" + std::to_string(i) + " [label=\"" + d.nodes[i].code + "\\nleaves=" +
           std::to_string(d.nodes[i].leaf_count()) + "\"];\n";
  }
  for (auto [a, b] : d.covers) out += "  t" + std::to_string(a) + " -> t" + std::to_string(b) + ";\n";
  return out + "}\n";
}

std::string export_json(const HasseDiagram& d) {
  nlohmann::json trees = nlohmann::json::array(), codes = nlohmann::json::array(), covers = nlohmann::json::array();
  for (const auto& t : d.nodes) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : t.graph.edges()) edges.push_back({e.u, e.v});
    trees.push_back(std::move(edges));
    codes.push_back(t.code);
  }
  for (auto [a, b] : d.covers) covers.push_back({a, b});
  return nlohmann::json{{"n", d.n}, {"trees", trees}, {"codes", codes}, {"covers", covers}}.dump();
}

}  // namespace conetutte
