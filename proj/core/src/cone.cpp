#include "conetutte/cone.hpp"

namespace conetutte {

namespace {

void check_vertex(const Multigraph& g, VertexId v) {
  if (v >= g.vertex_count())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(g.vertex_count()) + ")");
}

}  // namespace

IntPolynomial cone_f(const Multigraph& g, const TutteOptions& options) {
  return tutte_at_x1(cone(g).graph, options);
}

IntPolynomial cone_g(const Multigraph& g, VertexId v, const TutteOptions& options) {
  check_vertex(g, v);
  if (!g.has_neighbor(v)) return {};
  auto c = cone(g);
  return tutte_at_x1(delete_edge(c.graph, c.spokes[v]), options);
}

IntPolynomial cone_h(const Multigraph& g, VertexId v, const TutteOptions& options) {
  check_vertex(g, v);
  auto c = cone(g);
  return tutte_at_x1(contract_edge(c.graph, c.spokes[v]), options);
}

ConeTriple cone_triple(const Multigraph& g, VertexId v, const TutteOptions& options) {
  return {cone_f(g, options), cone_g(g, v, options), cone_h(g, v, options), v};
}

}  // namespace conetutte
