#pragma once

#include <array>
#include <optional>
#include <vector>

#include "apollonius/edge_conflict.hpp"

namespace apo {
// Floating-point brute-force reference implementations. Test instruments
// only: every classification carries a decisive margin, and callers discard
// instances whose margin falls under the guard instead of trusting them.
namespace oracle {

using P3 = std::array<double, 3>;

struct NumericSphere {
  P3 center;
  double radius;
};

struct TangentSphere {
  NumericSphere sphere;
  int orientation;  // sign of the tangency-tetra determinant in input order
};

// All external tangent spheres of the quadruple, or nullopt when the solver
// cannot decide (near-degenerate data).
std::optional<std::vector<TangentSphere>> tangent_spheres(const Site& s1, const Site& s2,
                                                          const Site& s3, const Site& s4);

// In-plane point of the trisector equidistant from the three sites.
std::optional<P3> trisector_origin(const Site& i, const Site& j, const Site& k);

// Signed parametrization value of a trisector point.
double map_value(const P3& p, const Site& i, const Site& j, const Site& k, const P3& origin);

// The trisector point with the given map value; Newton-refined.
std::optional<P3> trisector_sample(const Site& i, const Site& j, const Site& k,
                                   const P3& origin, double t);

struct ShadowClassification {
  ShadowType type;
  std::vector<double> endpoints;  // map values, ascending
  double margin;                  // smallest decisive gap encountered
};

std::optional<ShadowClassification> classify_shadow(const Site& i, const Site& j,
                                                    const Site& k, const Site& alpha,
                                                    double guard = 1e-6);

struct OrderedVertex {
  double map;
  VertexLabel label;  // site: 0 = a, 1 = b
};

// Oracle ordering of all existing vertices of (i,j,k,a) and (i,j,k,b);
// nullopt when any gap is under the guard.
std::optional<std::vector<OrderedVertex>> vertex_order(const Site& i, const Site& j,
                                                       const Site& k, const Site& a,
                                                       const Site& b, double guard = 1e-5);

std::optional<EdgeConflictResult> edge_conflict(const EdgeSpec& edge, const Site& q,
                                                double guard = 1e-6);

// Margin-guarded oracles for the low-level predicates.
std::optional<InConeResult> incone(const Site& a, const Site& b, const Site& c,
                                   double guard = 1e-6);
std::optional<TrisectorType> trisector(const Site& i, const Site& j, const Site& k,
                                       double guard = 1e-6);
std::optional<DistanceSigns> distance(const Site& i, const Site& j, const Site& k,
                                      const Site& alpha, double guard = 1e-6);

// Conflict sign of q against the orientation-matched tangent sphere.
std::optional<Sign> vertex_conflict(const Site& s1, const Site& s2, const Site& s3,
                                    const Site& s4, const Site& q, double guard = 1e-6);

}  // namespace oracle
}  // namespace apo
