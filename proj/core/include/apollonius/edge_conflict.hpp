#pragma once

#include "apollonius/order.hpp"

namespace apo {

enum class EdgeConflictResult {
  NoConflict,
  EntireEdge,
  LeftVertex,
  RightVertex,
  BothVertices,
  Interior,
};

// A finite Apollonius edge: the trisector of (i,j,k) bounded on the left by
// v_{ijkl} and on the right by v_{ikjm}. The caller asserts that both
// vertices exist and appear in that order.
struct EdgeSpec {
  Site i, j, k;
  Site l, m;
};

// Portion of the edge destroyed by inserting the query site: the type of
// edge ∩ shadow(q) as an interval structure.
EdgeConflictResult edge_conflict(const EdgeSpec& edge, const Site& q,
                                 DegreeLog* log = nullptr);

}  // namespace apo
