#include "apollonius/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace apo {
namespace oracle {

namespace {

P3 to_p3(const Vec3& v) { return {v.x.get_d(), v.y.get_d(), v.z.get_d()}; }

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dotd(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
P3 crossd(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const P3& a) { return std::sqrt(dotd(a, a)); }

double det3d(const P3& r0, const P3& r1, const P3& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

std::optional<P3> solve3(const std::array<P3, 3>& rows, const P3& rhs) {
  double d = det3d(rows[0], rows[1], rows[2]);
  double scale = 0;
  for (const auto& r : rows) scale = std::max(scale, std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2]));
  if (std::abs(d) < 1e-11 * std::max(1.0, scale * scale * scale)) return std::nullopt;
  P3 out;
  for (int j = 0; j < 3; ++j) {
    std::array<P3, 3> m = rows;
    for (int r = 0; r < 3; ++r) m[r][j] = rhs[r];
    out[j] = det3d(m[0], m[1], m[2]) / d;
  }
  return out;
}

double dist_site(const P3& p, const Site& s) {
  return norm(sub(p, to_p3(s.center))) - s.radius.get_d();
}

int orient_tag(const std::array<const Site*, 4>& sites, const P3& c, double R) {
  std::array<P3, 4> T;
  for (int n = 0; n < 4; ++n) {
    P3 cn = to_p3(sites[n]->center);
    double rn = sites[n]->radius.get_d();
    P3 d = sub(cn, c);
    double L = norm(d);
    if (std::abs(L - (R + rn)) > 1e-6 * (1 + L)) return 9;  // not actually tangent
    for (int t = 0; t < 3; ++t) T[n][t] = c[t] + R * d[t] / L;
  }
  double o = det3d(sub(T[1], T[0]), sub(T[2], T[0]), sub(T[3], T[0]));
  if (std::abs(o) < 1e-9) return 0;
  return o > 0 ? 1 : -1;
}

// Newton polish of (center, radius) on the four tangency equations.
bool polish(const std::array<const Site*, 4>& sites, P3& c, double& R) {
  for (int it = 0; it < 60; ++it) {
    double F[4];
    double J[4][4];
    for (int n = 0; n < 4; ++n) {
      P3 cn = to_p3(sites[n]->center);
      P3 d = sub(c, cn);
      double L = norm(d);
      if (L < 1e-12) return false;
      F[n] = L - (R + sites[n]->radius.get_d());
      for (int t = 0; t < 3; ++t) J[n][t] = d[t] / L;
      J[n][3] = -1.0;
    }
    // Gaussian elimination, partial pivoting.
    double A[4][5];
    for (int r = 0; r < 4; ++r) {
      for (int cc = 0; cc < 4; ++cc) A[r][cc] = J[r][cc];
      A[r][4] = -F[r];
    }
    for (int i = 0; i < 4; ++i) {
      int p = i;
      for (int r = i + 1; r < 4; ++r)
        if (std::abs(A[r][i]) > std::abs(A[p][i])) p = r;
      if (std::abs(A[p][i]) < 1e-14) return false;
      std::swap(A[i], A[p]);
      for (int r = i + 1; r < 4; ++r) {
        double mfac = A[r][i] / A[i][i];
        for (int cc = i; cc < 5; ++cc) A[r][cc] -= mfac * A[i][cc];
      }
    }
    double x[4];
    for (int i = 3; i >= 0; --i) {
      double acc = A[i][4];
      for (int cc = i + 1; cc < 4; ++cc) acc -= A[i][cc] * x[cc];
      x[i] = acc / A[i][i];
    }
    double step = std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]) + std::abs(x[3]);
    for (int t = 0; t < 3; ++t) c[t] += x[t];
    R += x[3];
    if (step < 1e-13) break;
  }
  for (int n = 0; n < 4; ++n) {
    double res = norm(sub(c, to_p3(sites[n]->center))) - (R + sites[n]->radius.get_d());
    if (std::abs(res) > 1e-8 * (1 + std::abs(R))) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<TangentSphere>> tangent_spheres(const Site& s1, const Site& s2,
                                                          const Site& s3, const Site& s4) {
  std::array<const Site*, 4> sites = {&s1, &s2, &s3, &s4};
  P3 C1 = to_p3(s1.center);
  double r1 = s1.radius.get_d();
  std::array<P3, 3> A;
  P3 b0, qcol;
  for (int n = 1; n < 4; ++n) {
    P3 Cn = to_p3(sites[n]->center);
    double rn = sites[n]->radius.get_d();
    for (int t = 0; t < 3; ++t) A[n - 1][t] = 2 * (Cn[t] - C1[t]);
    b0[n - 1] = dotd(Cn, Cn) - dotd(C1, C1) - rn * rn + r1 * r1;
    qcol[n - 1] = -2 * (rn - r1);
  }
  std::vector<TangentSphere> out;
  auto push_if_valid = [&](P3 c, double R) {
    if (R <= 0) return;
    if (!polish(sites, c, R) || R <= 0) return;
    int tag = orient_tag(sites, c, R);
    if (tag == 9) return;
    out.push_back({{c, R}, tag});
  };

  auto c0 = solve3(A, b0);
  auto c1 = solve3(A, qcol);
  if (c0 && c1) {
    P3 d0 = sub(*c0, C1);
    double qa = dotd(*c1, *c1) - 1.0;
    double qb = 2 * dotd(d0, *c1) - 2 * r1;
    double qc = dotd(d0, d0) - r1 * r1;
    std::vector<double> roots;
    if (std::abs(qa) < 1e-13) {
      if (std::abs(qb) > 1e-13) roots.push_back(-qc / qb);
    } else {
      double disc = qb * qb - 4 * qa * qc;
      if (disc >= 0) {
        double rt = std::sqrt(disc);
        roots.push_back((-qb - rt) / (2 * qa));
        roots.push_back((-qb + rt) / (2 * qa));
      }
    }
    for (double R : roots) {
      P3 c{(*c0)[0] + R * (*c1)[0], (*c0)[1] + R * (*c1)[1], (*c0)[2] + R * (*c1)[2]};
      push_if_valid(c, R);
    }
    return out;
  }

  // Coplanar quadruple: rank-2 system; solutions mirror across the plane.
  P3 w = crossd(A[0], A[1]);
  int rows[2] = {0, 1};
  double scale = norm(A[0]) + norm(A[1]) + norm(A[2]) + 1.0;
  if (norm(w) < 1e-9 * scale * scale) {
    w = crossd(A[0], A[2]);
    rows[1] = 2;
    if (norm(w) < 1e-9 * scale * scale) return std::nullopt;
  }
  double wn = norm(w);
  P3 wh{w[0] / wn, w[1] / wn, w[2] / wn};
  int kk = 3 - rows[0] - rows[1];
  double g11 = dotd(A[rows[0]], A[rows[0]]);
  double g12 = dotd(A[rows[0]], A[rows[1]]);
  double g22 = dotd(A[rows[1]], A[rows[1]]);
  double gk1 = dotd(A[kk], A[rows[0]]);
  double gk2 = dotd(A[kk], A[rows[1]]);
  double dg = g11 * g22 - g12 * g12;
  if (std::abs(dg) < 1e-14) return std::nullopt;
  double al = (gk1 * g22 - gk2 * g12) / dg;
  double be = (g11 * gk2 - g12 * gk1) / dg;
  double cons_b = b0[kk] - al * b0[rows[0]] - be * b0[rows[1]];
  double cons_q = qcol[kk] - al * qcol[rows[0]] - be * qcol[rows[1]];
  if (std::abs(cons_q) < 1e-12) {
    if (std::abs(cons_b) < 1e-9) return std::nullopt;  // co-circular family
    return out;                                        // inconsistent: none
  }
  double R = -cons_b / cons_q;
  if (R <= 0) return out;
  double rhs1 = b0[rows[0]] + R * qcol[rows[0]];
  double rhs2 = b0[rows[1]] + R * qcol[rows[1]];
  double x = (rhs1 * g22 - rhs2 * g12) / dg;
  double y = (g11 * rhs2 - g12 * rhs1) / dg;
  P3 c_pl{x * A[rows[0]][0] + y * A[rows[1]][0], x * A[rows[0]][1] + y * A[rows[1]][1],
          x * A[rows[0]][2] + y * A[rows[1]][2]};
  P3 d0 = sub(c_pl, C1);
  double off = dotd(d0, wh);
  double disc2 = (R + r1) * (R + r1) - dotd(d0, d0) + off * off;
  if (disc2 < 0) return out;
  double rt = std::sqrt(std::max(disc2, 0.0));
  std::vector<double> svals = rt < 1e-12 ? std::vector<double>{-off + rt}
                                         : std::vector<double>{-off + rt, -off - rt};
  for (double s : svals) {
    P3 c{c_pl[0] + s * wh[0], c_pl[1] + s * wh[1], c_pl[2] + s * wh[2]};
    push_if_valid(c, R);
  }
  return out;
}

std::optional<P3> trisector_origin(const Site& i, const Site& j, const Site& k) {
  P3 Ci = to_p3(i.center), Cj = to_p3(j.center), Ck = to_p3(k.center);
  P3 e1 = sub(Cj, Ci), e2 = sub(Ck, Ci);
  double a = 0.33, b = 0.33;
  auto at = [&](double aa, double bb) {
    return P3{Ci[0] + aa * e1[0] + bb * e2[0], Ci[1] + aa * e1[1] + bb * e2[1],
              Ci[2] + aa * e1[2] + bb * e2[2]};
  };
  for (int it = 0; it < 200; ++it) {
    P3 p = at(a, b);
    double f1 = dist_site(p, i) - dist_site(p, j);
    double f2 = dist_site(p, i) - dist_site(p, k);
    if (std::abs(f1) + std::abs(f2) < 1e-13) break;
    double h = 1e-7;
    P3 pa = at(a + h, b), pb = at(a, b + h);
    double j11 = (dist_site(pa, i) - dist_site(pa, j) - f1) / h;
    double j12 = (dist_site(pb, i) - dist_site(pb, j) - f1) / h;
    double j21 = (dist_site(pa, i) - dist_site(pa, k) - f2) / h;
    double j22 = (dist_site(pb, i) - dist_site(pb, k) - f2) / h;
    double dn = j11 * j22 - j12 * j21;
    if (std::abs(dn) < 1e-18) return std::nullopt;
    double da = (-f1 * j22 + f2 * j12) / dn;
    double db = (-j11 * f2 + j21 * f1) / dn;
    a += da;
    b += db;
    if (std::abs(da) + std::abs(db) < 1e-15) break;
  }
  P3 p = at(a, b);
  if (std::abs(dist_site(p, i) - dist_site(p, j)) > 1e-8 ||
      std::abs(dist_site(p, i) - dist_site(p, k)) > 1e-8)
    return std::nullopt;
  return p;
}

double map_value(const P3& p, const Site& i, const Site& j, const Site& k, const P3& origin) {
  P3 Ci = to_p3(i.center), Cj = to_p3(j.center), Ck = to_p3(k.center);
  P3 w = crossd(sub(Cj, Ci), sub(Ck, Ci));
  double side = dotd(sub(p, origin), w);
  double d = dist_site(p, i) - dist_site(origin, i);
  if (side == 0) return 0.0;
  return side > 0 ? d : -d;
}

std::optional<P3> trisector_sample(const Site& i, const Site& j, const Site& k,
                                   const P3& origin, double t) {
  if (t == 0) return origin;  // the Jacobian is singular at the coplanar point
  P3 Ci = to_p3(i.center), Cj = to_p3(j.center), Ck = to_p3(k.center);
  P3 w = crossd(sub(Cj, Ci), sub(Ck, Ci));
  double wn = norm(w);
  if (wn < 1e-14) return std::nullopt;
  P3 wh{w[0] / wn, w[1] / wn, w[2] / wn};
  double s = dist_site(origin, i) + std::abs(t);
  P3 p{origin[0] + t * wh[0], origin[1] + t * wh[1], origin[2] + t * wh[2]};
  const Site* sites[3] = {&i, &j, &k};
  for (int it = 0; it < 300; ++it) {
    double F[3];
    std::array<P3, 3> J;
    for (int n = 0; n < 3; ++n) {
      P3 cn = to_p3(sites[n]->center);
      P3 d = sub(p, cn);
      double L = norm(d);
      if (L < 1e-12) return std::nullopt;
      F[n] = L - sites[n]->radius.get_d() - s;
      J[n] = {d[0] / L, d[1] / L, d[2] / L};
    }
    auto dp = solve3(J, {-F[0], -F[1], -F[2]});
    if (!dp) return std::nullopt;
    for (int c = 0; c < 3; ++c) p[c] += (*dp)[c];
    if (std::abs((*dp)[0]) + std::abs((*dp)[1]) + std::abs((*dp)[2]) < 1e-13) break;
  }
  double err = 0;
  for (int n = 0; n < 3; ++n) err += std::abs(dist_site(p, *sites[n]) - s);
  if (err > 1e-8) return std::nullopt;
  return p;
}

namespace {

// Membership of the trisector point with map value t in the shadow of alpha;
// nullopt when the sample sits too close to the boundary.
std::optional<bool> shadow_member(const Site& i, const Site& j, const Site& k,
                                  const Site& alpha, const P3& origin, double t,
                                  double guard) {
  auto p = trisector_sample(i, j, k, origin, t);
  if (!p) return std::nullopt;
  double R = dist_site(*p, i);
  double d = norm(sub(*p, to_p3(alpha.center))) - R - alpha.radius.get_d();
  if (std::abs(d) < guard) return std::nullopt;
  return d < 0;
}

}  // namespace

std::optional<ShadowClassification> classify_shadow(const Site& i, const Site& j,
                                                    const Site& k, const Site& alpha,
                                                    double guard) {
  auto origin = trisector_origin(i, j, k);
  if (!origin) return std::nullopt;
  auto ts = tangent_spheres(i, j, k, alpha);
  if (!ts) return std::nullopt;
  std::vector<double> eps;
  for (const auto& t : *ts) eps.push_back(map_value(t.sphere.center, i, j, k, *origin));
  std::sort(eps.begin(), eps.end());
  double big = 10.0;
  for (double e : eps) big = std::max(big, 10 * (1 + std::abs(e)));

  ShadowClassification out;
  out.endpoints = eps;
  out.margin = 1.0;
  auto member = [&](double t) { return shadow_member(i, j, k, alpha, *origin, t, guard); };
  if (eps.empty()) {
    auto m = member(0.0);
    if (!m) return std::nullopt;
    out.type = *m ? ShadowType::Full : ShadowType::Empty;
    return out;
  }
  if (eps.size() == 1) {
    auto lo = member(eps[0] - big), hi = member(eps[0] + big);
    if (!lo || !hi || *lo == *hi) return std::nullopt;
    out.type = *lo ? ShadowType::LeftRay : ShadowType::RightRay;
    return out;
  }
  if (eps.size() == 2) {
    out.margin = eps[1] - eps[0];
    if (out.margin < guard) return std::nullopt;
    auto mid = member((eps[0] + eps[1]) / 2);
    auto lo = member(eps[0] - big), hi = member(eps[1] + big);
    if (!mid || !lo || !hi) return std::nullopt;
    if (*mid && !*lo && !*hi) {
      out.type = ShadowType::Interval;
      return out;
    }
    if (!*mid && *lo && *hi) {
      out.type = ShadowType::TwoRays;
      return out;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::vector<OrderedVertex>> vertex_order(const Site& i, const Site& j,
                                                       const Site& k, const Site& a,
                                                       const Site& b, double guard) {
  auto origin = trisector_origin(i, j, k);
  if (!origin) return std::nullopt;
  std::vector<OrderedVertex> out;
  const Site* extra[2] = {&a, &b};
  for (int n = 0; n < 2; ++n) {
    auto ts = tangent_spheres(i, j, k, *extra[n]);
    if (!ts) return std::nullopt;
    for (const auto& t : *ts) {
      if (t.orientation == 0) return std::nullopt;
      Orientation o = t.orientation < 0 ? Orientation::Ijk : Orientation::Ikj;
      out.push_back({map_value(t.sphere.center, i, j, k, *origin), {o, n}});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const OrderedVertex& x, const OrderedVertex& y) { return x.map < y.map; });
  for (std::size_t t = 1; t < out.size(); ++t)
    if (out[t].map - out[t - 1].map < guard) return std::nullopt;
  return out;
}

std::optional<EdgeConflictResult> edge_conflict(const EdgeSpec& edge, const Site& q,
                                                double guard) {
  auto origin = trisector_origin(edge.i, edge.j, edge.k);
  if (!origin) return std::nullopt;
  auto tl = tangent_spheres(edge.i, edge.j, edge.k, edge.l);
  auto tm = tangent_spheres(edge.i, edge.j, edge.k, edge.m);
  if (!tl || !tm) return std::nullopt;
  std::vector<double> lam, mu;
  for (const auto& t : *tl)
    if (t.orientation < 0)
      lam.push_back(map_value(t.sphere.center, edge.i, edge.j, edge.k, *origin));
  for (const auto& t : *tm)
    if (t.orientation > 0)
      mu.push_back(map_value(t.sphere.center, edge.i, edge.j, edge.k, *origin));
  if (lam.size() != 1 || mu.size() != 1) return std::nullopt;
  double lam1 = lam[0], mu2 = mu[0];
  if (mu2 - lam1 < guard) return std::nullopt;

  auto sq = classify_shadow(edge.i, edge.j, edge.k, q, guard);
  if (!sq) return std::nullopt;
  for (double e : sq->endpoints)
    if (std::abs(e - lam1) < guard || std::abs(e - mu2) < guard) return std::nullopt;

  double inf = 1e30;
  std::vector<std::pair<double, double>> parts;
  const auto& ep = sq->endpoints;
  switch (sq->type) {
    case ShadowType::Empty: break;
    case ShadowType::Full: parts.push_back({-inf, inf}); break;
    case ShadowType::LeftRay: parts.push_back({-inf, ep[0]}); break;
    case ShadowType::RightRay: parts.push_back({ep[0], inf}); break;
    case ShadowType::Interval: parts.push_back({ep[0], ep[1]}); break;
    case ShadowType::TwoRays:
      parts.push_back({-inf, ep[0]});
      parts.push_back({ep[1], inf});
      break;
  }
  std::vector<std::pair<double, double>> kept;
  for (auto& pr : parts) {
    double lo = std::max(pr.first, lam1), hi = std::min(pr.second, mu2);
    if (lo < hi - guard) kept.push_back({lo, hi});
  }
  if (kept.empty()) return EdgeConflictResult::NoConflict;
  if (kept.size() == 2) return EdgeConflictResult::BothVertices;
  bool left = std::abs(kept[0].first - lam1) < guard;
  bool right = std::abs(kept[0].second - mu2) < guard;
  if (left && right) return EdgeConflictResult::EntireEdge;
  if (left) return EdgeConflictResult::LeftVertex;
  if (right) return EdgeConflictResult::RightVertex;
  return EdgeConflictResult::Interior;
}

std::optional<InConeResult> incone(const Site& a_in, const Site& b_in, const Site& c,
                                   double guard) {
  const Site& a = a_in.radius <= b_in.radius ? a_in : b_in;
  const Site& b = a_in.radius <= b_in.radius ? b_in : a_in;
  P3 Ca = to_p3(a.center), Cb = to_p3(b.center), Cc = to_p3(c.center);
  double ra = a.radius.get_d(), rb = b.radius.get_d(), rc = c.radius.get_d();
  P3 ab = sub(Cb, Ca);
  double L = norm(ab);
  if (L < 1e-12) return std::nullopt;
  P3 u{ab[0] / L, ab[1] / L, ab[2] / L};
  double sin_t = (rb - ra) / L;
  if (std::abs(sin_t) > 1 - 1e-12) return std::nullopt;
  double cos_t = std::sqrt(1 - sin_t * sin_t);
  // Inside margin of a point against the containing semi-cone (cylinder when
  // the radii agree).
  auto margin = [&](const P3& p) {
    P3 v = sub(p, Ca);
    double t = dotd(v, u);
    P3 perp{v[0] - t * u[0], v[1] - t * u[1], v[2] - t * u[2]};
    double rho = norm(perp);
    if (std::abs(sin_t) < 1e-15) return ra - rho;  // cylinder
    double ta = t + ra / sin_t;  // axis coordinate measured from the apex
    return ta * sin_t - rho * cos_t;
  };
  double m = margin(Cc) - rc;
  if (std::abs(m) < guard) return std::nullopt;
  return m > 0 ? InConeResult::Inside : InConeResult::Outside;
}

std::optional<TrisectorType> trisector(const Site& i, const Site& j, const Site& k,
                                       double guard) {
  const Site* rot[3][3] = {{&i, &j, &k}, {&i, &k, &j}, {&j, &k, &i}};
  for (auto& r : rot) {
    auto res = incone(*r[0], *r[1], *r[2], guard);
    if (!res) return std::nullopt;
    if (*res == InConeResult::Inside) return TrisectorType::Elliptic;
  }
  return TrisectorType::Hyperbolic;
}

namespace {

struct PlaneD {
  P3 n;
  double d;
};

// Both planes cotangent to three spheres that leave them on the positive
// side: n.C_m + d = r_m with |n| = 1. Solved by expressing the linear
// unknowns in one parameter and closing with the unit-norm quadratic;
// coordinates are rotated when the leading system degenerates.
std::optional<std::array<PlaneD, 2>> cotangent_planes(const Site& i, const Site& j,
                                                      const Site& k) {
  P3 C[3] = {to_p3(i.center), to_p3(j.center), to_p3(k.center)};
  double r[3] = {i.radius.get_d(), j.radius.get_d(), k.radius.get_d()};
  double scale = 1;
  for (auto& c : C) scale = std::max({scale, std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});

  // Route 1: solve (a,b,c) linearly in d when the center matrix is regular.
  std::array<P3, 3> A = {C[0], C[1], C[2]};
  if (std::abs(det3d(A[0], A[1], A[2])) > 1e-9 * scale * scale * scale) {
    auto base = solve3(A, {r[0], r[1], r[2]});
    auto dir = solve3(A, {-1, -1, -1});
    if (base && dir) {
      double qa = dotd(*dir, *dir);
      double qb = 2 * dotd(*base, *dir);
      double qc = dotd(*base, *base) - 1;
      double disc = qb * qb - 4 * qa * qc;
      if (disc <= 0) return std::nullopt;
      std::array<PlaneD, 2> out;
      int idx = 0;
      for (double sgn_root : {-1.0, 1.0}) {
        double d = (-qb + sgn_root * std::sqrt(disc)) / (2 * qa);
        out[idx].n = {(*base)[0] + d * (*dir)[0], (*base)[1] + d * (*dir)[1],
                      (*base)[2] + d * (*dir)[2]};
        out[idx].d = d;
        ++idx;
      }
      return out;
    }
  }
  // Route 2: solve (a,b,d) linearly in c over the (x,y,1) system; rotate the
  // coordinates when that projection degenerates too.
  for (int rot = 0; rot < 3; ++rot) {
    auto pick = [&](const P3& p, int axis) { return p[(axis + rot) % 3]; };
    std::array<P3, 3> M;
    for (int n = 0; n < 3; ++n) M[n] = {pick(C[n], 0), pick(C[n], 1), 1.0};
    if (std::abs(det3d(M[0], M[1], M[2])) < 1e-9 * scale * scale) continue;
    auto base = solve3(M, {r[0], r[1], r[2]});
    auto dir = solve3(M, {-pick(C[0], 2), -pick(C[1], 2), -pick(C[2], 2)});
    if (!base || !dir) continue;
    // base+c*dir = (a, b, d); norm over (a, b, c).
    double qa = (*dir)[0] * (*dir)[0] + (*dir)[1] * (*dir)[1] + 1;
    double qb = 2 * ((*base)[0] * (*dir)[0] + (*base)[1] * (*dir)[1]);
    double qc = (*base)[0] * (*base)[0] + (*base)[1] * (*base)[1] - 1;
    double disc = qb * qb - 4 * qa * qc;
    if (disc <= 0) return std::nullopt;
    std::array<PlaneD, 2> out;
    int idx = 0;
    for (double sgn_root : {-1.0, 1.0}) {
      double c = (-qb + sgn_root * std::sqrt(disc)) / (2 * qa);
      P3 abd{(*base)[0] + c * (*dir)[0], (*base)[1] + c * (*dir)[1],
             (*base)[2] + c * (*dir)[2]};
      PlaneD pl;
      pl.n = {0, 0, 0};
      pl.n[(0 + rot) % 3] = abd[0];
      pl.n[(1 + rot) % 3] = abd[1];
      pl.n[(2 + rot) % 3] = c;
      pl.d = abd[2];
      out[idx++] = pl;
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<DistanceSigns> distance(const Site& i, const Site& j, const Site& k,
                                      const Site& alpha, double guard) {
  auto planes = cotangent_planes(i, j, k);
  if (!planes) return std::nullopt;
  // The +infinity plane's tangency points sit on the positive side of the
  // centers' plane, which happens exactly when w . n < 0.
  P3 w = crossd(sub(to_p3(j.center), to_p3(i.center)), sub(to_p3(k.center), to_p3(i.center)));
  double side0 = dotd(w, (*planes)[0].n);
  double side1 = dotd(w, (*planes)[1].n);
  if (std::abs(side0) < 1e-9 * norm(w) || side0 * side1 >= 0) return std::nullopt;
  const PlaneD& minus = side0 > 0 ? (*planes)[0] : (*planes)[1];
  const PlaneD& plus = side0 > 0 ? (*planes)[1] : (*planes)[0];
  P3 ca = to_p3(alpha.center);
  double dm = dotd(minus.n, ca) + minus.d - alpha.radius.get_d();
  double dp = dotd(plus.n, ca) + plus.d - alpha.radius.get_d();
  if (std::abs(dm) < guard || std::abs(dp) < guard) return std::nullopt;
  return DistanceSigns{dm < 0 ? Sign::Negative : Sign::Positive,
                       dp < 0 ? Sign::Negative : Sign::Positive};
}

std::optional<Sign> vertex_conflict(const Site& s1, const Site& s2, const Site& s3,
                                    const Site& s4, const Site& q, double guard) {
  auto ts = tangent_spheres(s1, s2, s3, s4);
  if (!ts) return std::nullopt;
  for (const auto& t : *ts) {
    if (t.orientation != -1) continue;
    double d = norm(sub(to_p3(q.center), t.sphere.center)) - t.sphere.radius -
               q.radius.get_d();
    if (std::abs(d) < guard) return std::nullopt;
    return d < 0 ? Sign::Negative : Sign::Positive;
  }
  return std::nullopt;
}

}  // namespace oracle
}  // namespace apo
