#include "apollonius/predicates.hpp"

#include <optional>

#include "apollonius/errors.hpp"

namespace apo {

int shadow_endpoint_count(ShadowType t) {
  switch (t) {
    case ShadowType::Empty:
    case ShadowType::Full: return 0;
    case ShadowType::LeftRay:
    case ShadowType::RightRay: return 1;
    case ShadowType::Interval:
    case ShadowType::TwoRays: return 2;
  }
  return 0;
}

InConeResult incone(const Site& a_in, const Site& b_in, const Site& c, DegreeLog* log) {
  if (contained(a_in, b_in)) throw ContainedSites();
  const Site& a = a_in.radius <= b_in.radius ? a_in : b_in;
  const Site& b = a_in.radius <= b_in.radius ? b_in : a_in;

  auto q = [](const Rational& v) { return Quantity::input(v); };
  Vec3 ab = b.center - a.center;
  Vec3 ac = c.center - a.center;

  if (a.radius != b.radius) {
    // Apex-side gate: the center of c must lie past the cone apex.
    Quantity m = (q(b.radius) - q(a.radius)) * (q(ac.x) * q(ab.x) + q(ac.y) * q(ab.y) +
                                                q(ac.z) * q(ab.z)) +
                 q(a.radius) * (q(ab.x) * q(ab.x) + q(ab.y) * q(ab.y) + q(ab.z) * q(ab.z));
    if (sign_of(m, log, "incone") != Sign::Positive) return InConeResult::Outside;
  }

  if (cross(ab, ac) == Vec3{0, 0, 0}) {
    // Collinear centers: compare r_c with the cone radius at c's position.
    const Rational* pairs[3][2] = {{&ac.x, &ab.x}, {&ac.y, &ab.y}, {&ac.z, &ab.z}};
    for (auto& pr : pairs) {
      if (*pr[1] == 0) continue;
      Quantity num = (q(c.radius) - q(a.radius)) * q(*pr[1]) -
                     (q(b.radius) - q(a.radius)) * q(*pr[0]);
      Sign s = sign_of(num, log, "incone") * sign_of(q(*pr[1]), log, "incone");
      if (s == Sign::Negative) return InConeResult::Inside;
      if (s == Sign::Zero) return InConeResult::CircleTouch;
      return InConeResult::Outside;
    }
    throw ContainedSites();  // identical centers
  }

  Quantity dxy = d3_ones(a, b, c, RawAxis::X, RawAxis::Y);
  Quantity dxz = d3_ones(a, b, c, RawAxis::X, RawAxis::Z);
  Quantity dyz = d3_ones(a, b, c, RawAxis::Y, RawAxis::Z);
  Quantity dxr = d3_ones(a, b, c, RawAxis::X, RawAxis::R);
  Quantity dyr = d3_ones(a, b, c, RawAxis::Y, RawAxis::R);
  Quantity dzr = d3_ones(a, b, c, RawAxis::Z, RawAxis::R);

  Quantity delta = dxy * dxy + dxz * dxz + dyz * dyz - dxr * dxr - dyr * dyr - dzr * dzr;
  Sign sd = sign_of(delta, log, "incone");
  if (sd == Sign::Positive) return InConeResult::Outside;

  // Perturbed-discriminant linear coefficient: the sign of the radius
  // inflation that brings c to a single-point tangency.
  Quantity delta1 = -2 * (q(ab.x) * dxr + q(ab.y) * dyr + q(ab.z) * dzr);
  Sign s1 = sign_of(delta1, log, "incone");
  if (sd == Sign::Zero)
    return s1 == Sign::Negative ? InConeResult::Outside : InConeResult::OnePointTouch;
  if (s1 == Sign::Positive) return InConeResult::Inside;
  if (s1 == Sign::Negative) return InConeResult::Outside;
  throw DegenerateAnswer("incone: vanishing perturbation coefficient");
}

TrisectorType trisector(const Site& i, const Site& j, const Site& k, DegreeLog* log) {
  const Site* rot[3][3] = {{&i, &j, &k}, {&i, &k, &j}, {&j, &k, &i}};
  for (auto& r : rot) {
    switch (incone(*r[0], *r[1], *r[2], log)) {
      case InConeResult::Inside:
      case InConeResult::CircleTouch: return TrisectorType::Elliptic;
      case InConeResult::OnePointTouch: return TrisectorType::Parabolic;
      case InConeResult::Outside: break;
    }
  }
  return TrisectorType::Hyperbolic;
}

DistanceSigns distance(const Site& i, const Site& j, const Site& k, const Site& alpha,
                       DegreeLog* log) {
  Quantity dyz = d3_ones(i, j, k, RawAxis::Y, RawAxis::Z);
  Quantity dxz = d3_ones(i, j, k, RawAxis::X, RawAxis::Z);
  Quantity dxy = d3_ones(i, j, k, RawAxis::X, RawAxis::Y);
  Quantity d4 = d4_ones(i, j, k, alpha, RawAxis::X, RawAxis::Y, RawAxis::Z);

  if (d4.value != 0) {
    Quantity dyzr = d4_ones(i, j, k, alpha, RawAxis::Y, RawAxis::Z, RawAxis::R);
    Quantity dxzr = d4_ones(i, j, k, alpha, RawAxis::X, RawAxis::Z, RawAxis::R);
    Quantity dxyr = d4_ones(i, j, k, alpha, RawAxis::X, RawAxis::Y, RawAxis::R);
    Quantity l1 = -2 * (dyzr * dyz + dxzr * dxz + dxyr * dxy);
    Quantity l0 = dyzr * dyzr + dxzr * dxzr + dxyr * dxyr - d4 * d4;

    Sign s0 = sign_of(l0, log, "distance");
    if (s0 == Sign::Positive) {
      // Both roots share the sign of their sum.
      Sign t = -sign_of(l1, log, "distance");
      if (t == Sign::Zero) throw DegenerateAnswer("distance: conjugate tangent planes");
      return {t, t};
    }
    Sign side = orient3d(alpha.center, i.center, j.center, k.center, log, "distance");
    if (s0 == Sign::Negative) {
      return side == Sign::Positive ? DistanceSigns{Sign::Positive, Sign::Negative}
                                    : DistanceSigns{Sign::Negative, Sign::Positive};
    }
    // One root is zero: the other decides which plane alpha touches.
    Sign other = -sign_of(l1, log, "distance");
    if (side == Sign::Positive)
      return other == Sign::Positive ? DistanceSigns{Sign::Positive, Sign::Zero}
                                     : DistanceSigns{Sign::Zero, Sign::Negative};
    if (side == Sign::Negative)
      return other == Sign::Positive ? DistanceSigns{Sign::Zero, Sign::Positive}
                                     : DistanceSigns{Sign::Negative, Sign::Zero};
    return {Sign::Zero, Sign::Zero};
  }

  // Coplanar centers: both planes are at the same distance from alpha.
  Quantity d3p = d3_plain(i, j, k);
  if (d3p.value != 0) {
    Quantity d4r = d4_plain(i, j, k, alpha);
    Sign e = -(sign_of(d4r, log, "distance") * sign_of(d3p, log, "distance"));
    return {e, e};
  }
  struct Fallback {
    RawAxis a, b;
  } fallbacks[3] = {{RawAxis::X, RawAxis::Y}, {RawAxis::X, RawAxis::Z}, {RawAxis::Y, RawAxis::Z}};
  for (auto& f : fallbacks) {
    Quantity d2 = d3_ones(i, j, k, f.a, f.b);
    if (d2.value == 0) continue;
    Quantity d3r = d4_ones(i, j, k, alpha, f.a, f.b, RawAxis::R);
    Sign e = sign_of(d3r, log, "distance") * sign_of(d2, log, "distance");
    return {e, e};
  }
  throw NotHyperbolic();  // collinear centers cannot carry a hyperbolic trisector
}

namespace {

// Circumcenter of four affinely independent points, cleared of denominators:
// center = v / den with den nonzero iff the tetrahedron is not flat.
struct Circum {
  Vec3 v;
  Rational den;
};

std::optional<Circum> circumcenter(const Vec3& c0, const Vec3& c1, const Vec3& c2,
                                   const Vec3& c3) {
  auto q = [](const Rational& r) { return Quantity::input(r); };
  Vec3 rows[3] = {c1 - c0, c2 - c0, c3 - c0};
  Rational rhs[3];
  const Vec3* cs[3] = {&c1, &c2, &c3};
  for (int n = 0; n < 3; ++n)
    rhs[n] = (dot(*cs[n], *cs[n]) - dot(c0, c0)) / 2;
  std::array<std::array<Quantity, 3>, 3> m = {{{q(rows[0].x), q(rows[0].y), q(rows[0].z)},
                                               {q(rows[1].x), q(rows[1].y), q(rows[1].z)},
                                               {q(rows[2].x), q(rows[2].y), q(rows[2].z)}}};
  Rational den = det3(m).value;
  if (den == 0) return std::nullopt;
  Vec3 v;
  Rational* out[3] = {&v.x, &v.y, &v.z};
  for (int col = 0; col < 3; ++col) {
    auto mm = m;
    for (int r = 0; r < 3; ++r) mm[r][col] = Quantity(rhs[r], 2);
    *out[col] = det3(mm).value;
  }
  return Circum{v, den};
}

// Existence for four equal radii: a sphere through the four centers exists
// iff they are not flat, and it yields an external tangent sphere only when
// the circumradius outgrows the common radius.
ExistenceCount existence_equal_radius(const Site& i, const Site& j, const Site& k,
                                      const Site& a, DegreeLog* log) {
  auto q = [](const Rational& r) { return Quantity::input(r); };
  const Vec3 &c0 = i.center, &c1 = j.center, &c2 = k.center, &c3 = a.center;
  Vec3 u = c1 - c0, v = c2 - c0, w = c3 - c0;
  std::array<std::array<Quantity, 3>, 3> m = {{{q(u.x), q(u.y), q(u.z)},
                                               {q(v.x), q(v.y), q(v.z)},
                                               {q(w.x), q(w.y), q(w.z)}}};
  Sign flat = sign_of(det3(m), log, "existence");
  if (flat != Sign::Zero) {
    auto circ = circumcenter(c0, c1, c2, c3);
    if (!circ) throw DegenerateAnswer("existence: inconsistent flatness");
    // ||v - den*c0||^2 vs den^2 r^2, cleared of the circumcenter denominator.
    Quantity den(circ->den, 3);
    Vec3 d{circ->v.x - circ->den * c0.x, circ->v.y - circ->den * c0.y,
           circ->v.z - circ->den * c0.z};
    Quantity dd = Quantity(dot(d, d), 8);
    Quantity rr = den * den * q(i.radius) * q(i.radius);
    Sign s = sign_of(dd - rr, log, "existence");
    return s == Sign::Negative ? ExistenceCount::Zero : ExistenceCount::One;
  }
  // Flat: co-circular centers admit infinitely many tangent spheres.
  Vec3 n = cross(u, v);
  if (n == Vec3{0, 0, 0}) {
    n = cross(u, w);
    if (n == Vec3{0, 0, 0}) return ExistenceCount::Zero;  // collinear centers
    // Degenerate triangle (i,j,k); re-run with rows permuted so the pair
    // spanning the plane comes first.
    return existence_equal_radius(i, j, a, k, log);
  }
  // Pick the dominant normal axis and solve row3 = al*row1 + be*row2 in the
  // projected 2x2 system; co-circularity is the consistency of the squared
  // norms under the same combination.
  Rational ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  int drop = (ax >= ay && ax >= az) ? 0 : (ay >= az ? 1 : 2);
  auto proj = [&](const Vec3& p, int idx) {
    const Rational* c[3] = {&p.x, &p.y, &p.z};
    int keep[2], t = 0;
    for (int s = 0; s < 3; ++s)
      if (s != drop) keep[t++] = s;
    return *c[keep[idx]];
  };
  Quantity x2 = q(proj(u, 0)), y2 = q(proj(u, 1));
  Quantity x3 = q(proj(v, 0)), y3 = q(proj(v, 1));
  Quantity x4 = q(proj(w, 0)), y4 = q(proj(w, 1));
  Quantity den = x2 * y3 - y2 * x3;
  Quantity r2 = Quantity(dot(c1, c1) - dot(c0, c0), 2);
  Quantity r3 = Quantity(dot(c2, c2) - dot(c0, c0), 2);
  Quantity r4 = Quantity(dot(c3, c3) - dot(c0, c0), 2);
  Quantity lhs = r4 * den;
  Quantity rhs = (x4 * y3 - y4 * x3) * r2 + (x2 * y4 - y2 * x4) * r3;
  Sign cc = sign_of(lhs - rhs, log, "existence");
  return cc == Sign::Zero ? ExistenceCount::Infinite : ExistenceCount::Zero;
}

Site rotate_axes(const Site& s) {
  return Site{{s.center.y, s.center.z, s.center.x}, s.radius};
}

}  // namespace

ExistenceCount existence(const Site& i, const Site& j, const Site& k, const Site& a,
                         DegreeLog* log) {
  const Site* quad[4] = {&i, &j, &k, &a};
  for (int p = 0; p < 4; ++p)
    for (int t = p + 1; t < 4; ++t)
      if (contained(*quad[p], *quad[t])) throw ContainedSites();

  if (i.radius == j.radius && j.radius == k.radius && k.radius == a.radius)
    return existence_equal_radius(i, j, k, a, log);

  int pole = 0;
  for (int t = 1; t < 4; ++t)
    if (quad[t]->radius < quad[pole]->radius) pole = t;

  Site sites[4] = {*quad[0], *quad[1], *quad[2], *quad[3]};
  for (int rot = 0; rot < 3; ++rot) {
    InvertedSite inv[3];
    int t = 0;
    for (int s = 0; s < 4; ++s) {
      if (s == pole) continue;
      inv[t] = invert_about(sites[s], sites[pole]);
      if (inv[t].pb.value == 0) throw PoleDegeneracy();
      ++t;
    }
    Quantity exyz = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::Z);
    Quantity exyp = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::P);
    Quantity exzp = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Z, Axis::P);
    Quantity eyzp = e3(inv[0], inv[1], inv[2], Axis::Y, Axis::Z, Axis::P);
    Quantity exrp = e3(inv[0], inv[1], inv[2], Axis::X, Axis::R, Axis::P);
    Quantity eyrp = e3(inv[0], inv[1], inv[2], Axis::Y, Axis::R, Axis::P);
    Quantity ezrp = e3(inv[0], inv[1], inv[2], Axis::Z, Axis::R, Axis::P);
    Quantity w8 = exyp * exyp + exzp * exzp + eyzp * eyzp - exrp * exrp - eyrp * eyrp -
                  ezrp * ezrp;

    if (exyz.value != 0) {
      Quantity exyr = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::R);
      Quantity exzr = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Z, Axis::R);
      Quantity eyzr = e3(inv[0], inv[1], inv[2], Axis::Y, Axis::Z, Axis::R);
      Quantity m1 = -2 * (eyzr * eyzp + exzr * exzp + exyr * exyp);
      Quantity m0 = eyzr * eyzr + exzr * exzr + exyr * exyr - exyz * exyz;

      Sign sw = sign_of(w8, log, "existence");
      if (sw == Sign::Negative) return ExistenceCount::Zero;
      if (sw == Sign::Zero) {
        return -sign_of(m1, log, "existence") == Sign::Positive ? ExistenceCount::OneDouble
                                                                : ExistenceCount::Zero;
      }
      Sign s0 = sign_of(m0, log, "existence");
      if (s0 == Sign::Negative) return ExistenceCount::One;
      Sign s1 = sign_of(m1, log, "existence");
      if (s0 == Sign::Zero) return s1 == Sign::Negative ? ExistenceCount::One
                                                        : ExistenceCount::Zero;
      return s1 == Sign::Negative ? ExistenceCount::Two : ExistenceCount::Zero;
    }

    if (exyp.value != 0) {
      Quantity exyr = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::R);
      Sign d = sign_of(exyr, log, "existence") * sign_of(exyp, log, "existence");
      Sign sw = sign_of(w8, log, "existence");
      if (sw == Sign::Negative || d == Sign::Negative) return ExistenceCount::Zero;
      if (d == Sign::Zero) return ExistenceCount::Zero;  // planes pass through the pole image
      if (sw == Sign::Zero) return ExistenceCount::OneDouble;
      return ExistenceCount::Two;
    }

    // E^{xyp} vanished; rotate coordinates so another projection pair leads.
    for (auto& s : sites) s = rotate_axes(s);
  }
  // All projections vanished: collinear inverted centers. Tangent planes, if
  // any, come as a rotational family.
  return ExistenceCount::Infinite;
}

ShadowType shadow(const Site& i, const Site& j, const Site& k, const Site& alpha,
                  DegreeLog* log) {
  if (trisector(i, j, k, log) != TrisectorType::Hyperbolic) throw NotHyperbolic();
  ExistenceCount e = existence(i, j, k, alpha, log);
  DistanceSigns d = distance(i, j, k, alpha, log);
  if (e == ExistenceCount::OneDouble || e == ExistenceCount::Infinite)
    throw DegenerateShadow("shadow: degenerate tangent sphere count");

  if (e == ExistenceCount::Zero) {
    // A single outside tangency to a plane at infinity keeps the open shadow
    // empty, but a double tangency can hide either answer and is rejected.
    if (d.minus_plane == Sign::Zero && d.plus_plane == Sign::Zero)
      throw DegenerateShadow("shadow: tangent to both planes at infinity");
    if (d.minus_plane != Sign::Negative && d.plus_plane != Sign::Negative)
      return ShadowType::Empty;
    if (d.minus_plane == Sign::Negative && d.plus_plane == Sign::Negative)
      return ShadowType::Full;
    throw DegenerateShadow("shadow: sign pattern inconsistent with zero endpoints");
  }
  if (d.minus_plane == Sign::Zero || d.plus_plane == Sign::Zero)
    throw DegenerateShadow("shadow: tangent to a plane at infinity");
  if (e == ExistenceCount::One) {
    if (d.minus_plane == d.plus_plane)
      throw DegenerateShadow("shadow: sign pattern inconsistent with one endpoint");
    return d.minus_plane == Sign::Negative ? ShadowType::LeftRay : ShadowType::RightRay;
  }
  if (d.minus_plane != d.plus_plane)
    throw DegenerateShadow("shadow: sign pattern inconsistent with two endpoints");
  return d.minus_plane == Sign::Positive ? ShadowType::Interval : ShadowType::TwoRays;
}

}  // namespace apo
