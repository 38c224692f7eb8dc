#include "conetutte/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace conetutte {

namespace {

// Graphs this small are cheaper to recurse on than to hash.
constexpr std::size_t kMemoMinEdges = 5;
constexpr std::size_t kMemoMaxEntries = 1u << 21;

struct Memo {
  std::unordered_map<std::string, IntPolynomial> table;
};

Memo& thread_memo() {
  thread_local Memo memo;
  return memo;
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

// Drops loops, contracts bridges, removes isolated vertices. Returns the
// number of loops removed; the reduced graph has only ordinary edges.
std::size_t reduce(const Multigraph& g, Multigraph& out) {
  std::size_t loops = 0;
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop())
      ++loops;
    else
      kept.push_back(e);
  }
  Multigraph noloops(g.vertex_count(), std::move(kept));
  auto bridge = find_bridges(noloops);

  DisjointSets ds(noloops.vertex_count());
  for (EdgeId i = 0; i < noloops.edge_count(); ++i)
    if (bridge[i]) ds.unite(noloops.edges()[i].u, noloops.edges()[i].v);

  // Surviving vertices are class representatives touched by a non-bridge
  // edge, renumbered in ascending order.
  std::vector<VertexId> index(noloops.vertex_count(), UINT32_MAX);
  for (EdgeId i = 0; i < noloops.edge_count(); ++i) {
    if (bridge[i]) continue;
    index[ds.find(noloops.edges()[i].u)] = 0;
    index[ds.find(noloops.edges()[i].v)] = 0;
  }
  VertexId next = 0;
  for (auto& x : index)
    if (x == 0) x = next++;
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < noloops.edge_count(); ++i) {
    if (bridge[i]) continue;
    const auto& e = noloops.edges()[i];
    edges.push_back({index[ds.find(e.u)], index[ds.find(e.v)]});
  }
  out = Multigraph(next, std::move(edges));
  return loops;
}

IntPolynomial tutte_rec(const Multigraph& g, bool memoize) {
  Multigraph core;
  const std::size_t loops = reduce(g, core);
  if (core.edge_count() == 0) return IntPolynomial::monomial(loops);

  const bool use_memo = memoize && core.edge_count() >= kMemoMinEdges;
  std::string key;
  if (use_memo) {
    key = memo_key(core);
    auto& table = thread_memo().table;
    if (auto it = table.find(key); it != table.end()) return it->second.shifted(loops);
  }

  // Every remaining edge is ordinary; branch on the first.
  IntPolynomial value = tutte_rec(delete_edge(core, 0), memoize) + tutte_rec(contract_edge(core, 0), memoize);

  if (use_memo) {
    auto& table = thread_memo().table;
    if (table.size() >= kMemoMaxEntries) table.clear();
    table.emplace(std::move(key), value);
  }
  return value.shifted(loops);
}

}  // namespace

IntPolynomial tutte_at_x1(const Multigraph& g, const TutteOptions& options) {
  return tutte_rec(g, options.memoize);
}

std::size_t tutte_cache_size() { return thread_memo().table.size(); }

void clear_tutte_cache() { thread_memo().table.clear(); }

std::string memo_key(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    if (!e.is_loop()) adj[e.v].push_back(e.u);
  }

  // Color refinement seeded by (degree, loop count).
  std::vector<std::uint32_t> color(n);
  {
    std::vector<std::pair<std::size_t, std::size_t>> seed(n);
    for (const auto& e : g.edges()) {
      if (e.is_loop()) ++seed[e.u].second;
    }
    for (VertexId v = 0; v < n; ++v) seed[v].first = adj[v].size();
    auto sorted = seed;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v = 0; v < n; ++v)
      color[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), seed[v]) - sorted.begin());
  }
  std::size_t classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (VertexId v = 0; v < n; ++v) {
      sig[v].reserve(adj[v].size() + 1);
      sig[v].push_back(color[v]);
      std::vector<std::uint32_t> nb;
      nb.reserve(adj[v].size());
      for (VertexId w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v = 0; v < n; ++v)
      color[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }

  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v)
    if (!adj[v].empty()) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return color[a] < color[b]; });
  std::vector<VertexId> pos(n, 0);
  for (VertexId i = 0; i < order.size(); ++i) pos[order[i]] = i;

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto a = pos[e.u], b = pos[e.v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());

  std::string key;
  key.reserve(2 + 2 * edges.size());
  auto put = [&key](VertexId x) {
    // Vertex ids are tiny here; two bytes cover anything we recurse on.
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>(x >> 8));
  };
  put(static_cast<VertexId>(order.size()));
  for (auto [a, b] : edges) {
    put(a);
    put(b);
  }
  return key;
}

BivarPolynomial tutte_subset_oracle(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kSubsetOracleMaxEdges)
    throw InvalidArgument("subset oracle limited to " + std::to_string(kSubsetOracleMaxEdges) + " edges");
  const std::size_t n = g.vertex_count();
  const std::size_t full_rank = n - g.component_count();

  // counts[a][b] = number of subsets with corank a and nullity b.
  std::vector<std::vector<Coeff>> counts(full_rank + 1, std::vector<Coeff>(m + 1, 0));
  const auto edges = g.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    DisjointSets ds(n);
    std::size_t rank = 0, size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      rank += ds.unite(edges[i].u, edges[i].v);
    }
    counts[full_rank - rank][size - rank] += 1;
  }

  // Expand (x-1)^a (y-1)^b.
  std::vector<std::vector<Coeff>> binom(m + 2, std::vector<Coeff>(m + 2, 0));
  for (std::size_t i = 0; i < binom.size(); ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  auto sign = [](std::size_t k) -> Coeff { return k % 2 ? -1 : 1; };
  BivarPolynomial result;
  for (std::size_t a = 0; a <= full_rank; ++a) {
    for (std::size_t b = 0; b <= m; ++b) {
      Coeff c = counts[a][b];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= a; ++i) {
        for (std::size_t j = 0; j <= b; ++j) {
          Coeff term = checked::mul(c, checked::mul(binom[a][i], binom[b][j]));
          term = checked::mul(term, sign((a - i) + (b - j)));
          result.add_term(static_cast<int>(i), static_cast<int>(j), term);
        }
      }
    }
  }
  return result;
}

Coeff spanning_tree_count(const Multigraph& g) {
  if (!g.is_connected()) throw InvalidArgument("spanning_tree_count needs a connected graph");
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  // Reduced Laplacian: drop the last row and column.
  const std::size_t k = n - 1;
  std::vector<std::vector<Coeff>> a(k, std::vector<Coeff>(k, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u < k) a[e.u][e.u] += 1;
    if (e.v < k) a[e.v][e.v] += 1;
    if (e.u < k && e.v < k) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  // Bareiss: after step p every entry is an exact minor, so each division is exact.
  Coeff sign = 1, prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j)
        a[i][j] = checked::sub(checked::mul(a[i][j], a[p][p]), checked::mul(a[i][p], a[p][j])) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace conetutte
