#pragma once

#include <array>

#include "apollonius/kernel.hpp"

namespace apo {

struct Vec3 {
  Rational x, y, z;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Rational dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline bool operator==(const Vec3& a, const Vec3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

// A sphere site: the generator of the Apollonius diagram.
struct Site {
  Vec3 center;
  Rational radius;
};

inline bool same_center(const Site& a, const Site& b) { return a.center == b.center; }

// True when one closed ball lies inside (or coincides with) the other:
// ||Ca-Cb||^2 <= (ra-rb)^2. Pairs that are merely overlapping are fine.
inline bool contained(const Site& a, const Site& b) {
  Vec3 d = a.center - b.center;
  Rational dr = a.radius - b.radius;
  return dot(d, d) <= dr * dr;
}

// sign det [b-a; c-a; d-a]: the orientation of the tetrahedron (a,b,c,d).
Sign tet_orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// 3x3 and 4x4 determinants over degree-tagged entries, row-major.
Quantity det3(const std::array<std::array<Quantity, 3>, 3>& m);
Quantity det4(const std::array<std::array<Quantity, 4>, 4>& m);

}  // namespace apo
