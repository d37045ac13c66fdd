#pragma once

#include <vector>

#include "apollonius/insphere.hpp"

namespace apo {

// One Apollonius vertex named symbolically: the orientation part together
// with which extra site defines it (0 = the fourth argument of order(), 1 =
// the fifth).
struct VertexLabel {
  Orientation orient;
  int site;
};

inline bool operator==(const VertexLabel& a, const VertexLabel& b) {
  return a.orient == b.orient && a.site == b.site;
}

using Ordering = std::vector<VertexLabel>;

// Sequence of the existing Apollonius vertices among v_{ijka}, v_{ikja},
// v_{ijkb}, v_{ikjb} along the oriented trisector of (i,j,k). Requires a
// hyperbolic trisector and both shadows different from Empty/Full.
Ordering order(const Site& i, const Site& j, const Site& k, const Site& a,
               const Site& b, DegreeLog* log = nullptr);

}  // namespace apo
