#pragma once

#include "apollonius/inversion.hpp"
#include "apollonius/site.hpp"

namespace apo {

enum class InConeResult { Outside, Inside, OnePointTouch, CircleTouch };

enum class TrisectorType { Hyperbolic, Elliptic, Parabolic };

// Signs of the query sphere against the two cotangent planes of a hyperbolic
// trisector: (vs the map -> -inf plane, vs the map -> +inf plane).
struct DistanceSigns {
  Sign minus_plane;
  Sign plus_plane;
};

enum class ExistenceCount { Zero, One, OneDouble, Two, Infinite };

enum class ShadowType { Empty, Full, LeftRay, RightRay, Interval, TwoRays };

// Number of finite endpoints a shadow type carries on the trisector.
int shadow_endpoint_count(ShadowType t);

// Position of S_c against the closed semi-cone spanned by S_a and S_b.
InConeResult incone(const Site& a, const Site& b, const Site& c,
                    DegreeLog* log = nullptr);

// Trisector type of three pairwise non-contained sites, via three InCone
// rotations; stops at the first deciding answer.
TrisectorType trisector(const Site& i, const Site& j, const Site& k,
                        DegreeLog* log = nullptr);

// Requires trisector(i,j,k) hyperbolic.
DistanceSigns distance(const Site& i, const Site& j, const Site& k, const Site& alpha,
                       DegreeLog* log = nullptr);

// Number of finite external Apollonius spheres of the quadruple.
ExistenceCount existence(const Site& i, const Site& j, const Site& k, const Site& a,
                         DegreeLog* log = nullptr);

// Topological type of the shadow region of alpha on the oriented trisector
// of (i,j,k). Requires a hyperbolic trisector.
ShadowType shadow(const Site& i, const Site& j, const Site& k, const Site& alpha,
                  DegreeLog* log = nullptr);

}  // namespace apo
