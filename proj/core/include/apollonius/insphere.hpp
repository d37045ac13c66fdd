#pragma once

#include <vector>

#include "apollonius/predicates.hpp"

namespace apo {

// Which of the two possible Apollonius vertices of an ordered quadruple a
// tangent sphere realizes: Ijk keeps the input order (S1,S2,S3,S4), Ikj swaps
// the middle pair (S1,S3,S2,S4).
enum class Orientation { Ijk, Ikj };

inline Orientation flip(Orientation o) {
  return o == Orientation::Ijk ? Orientation::Ikj : Orientation::Ijk;
}

// A tangent plane a*u + b*v + c*w + d = 0 in the inverted space, with unit
// normal and d > 0; coefficients live in a one-square-root extension. For the
// all-equal-radius branch the sphere is reported directly instead.
struct TangentPlaneW {
  bool inverted = true;  // false for the equal-radius (circumsphere) branch
  Ext a, b, c, d;
  std::size_t pole = 0;  // index of the inversion pole within the quadruple
  // Equal-radius branch: tangent sphere center = circum_v / circum_den,
  // squared radius (of the tangent sphere in the reduced space) = circum_r2.
  Vec3 circum_v{};
  Rational circum_den = 0;
};

struct ClassifiedPlane {
  Orientation label;
  TangentPlaneW plane;
};

// All admissible tangent planes of the quadruple, each labeled by the exact
// orientation of its tangency tetrahedron. 0, 1, or 2 entries; orientations
// are distinct when two exist. Throws DegenerateDouble on a double root and
// InfinitelyMany in the co-circular equal-radius case.
std::vector<ClassifiedPlane> classify_tangent_planes(const Site& s1, const Site& s2,
                                                     const Site& s3, const Site& s4,
                                                     DegreeLog* log = nullptr);

// Conflict sign of the query against the Apollonius sphere whose tangency
// tetrahedron keeps the input order (the vertex v_{S1 S2 S3 S4}): Negative
// when q intersects it, Positive when disjoint, Zero when tangent. Throws
// VertexNotFound when that vertex does not exist.
Sign insphere(const Site& s1, const Site& s2, const Site& s3, const Site& s4,
              const Site& q, DegreeLog* log = nullptr);

}  // namespace apo
