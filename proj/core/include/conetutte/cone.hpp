#pragma once

#include "conetutte/graph.hpp"
#include "conetutte/poly.hpp"
#include "conetutte/tutte.hpp"

namespace conetutte {

// f(G) = T_{Cone(G)}(1, y).
IntPolynomial cone_f(const Multigraph& g, const TutteOptions& options = {});

// g_v(G): T(1, y) of Cone(G) with the spoke at v deleted, or 0 when v has
// no non-loop edge to another vertex (the spoke is then a bridge).
IntPolynomial cone_g(const Multigraph& g, VertexId v, const TutteOptions& options = {});

// h_v(G): T(1, y) of Cone(G) with the spoke at v contracted.
IntPolynomial cone_h(const Multigraph& g, VertexId v, const TutteOptions& options = {});

struct ConeTriple {
  IntPolynomial f;
  IntPolynomial g;
  IntPolynomial h;
  VertexId vertex;
};

ConeTriple cone_triple(const Multigraph& g, VertexId v, const TutteOptions& options = {});

}  // namespace conetutte
