#include "apollonius/insphere.hpp"

#include <array>
#include <optional>

#include "apollonius/errors.hpp"

namespace apo {

namespace {

struct QVec {
  Quantity x, y, z;
};

Quantity dotq(const QVec& a, const QVec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

QVec crossq(const QVec& a, const QVec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Site rotate_axes(const Site& s) {
  return Site{{s.center.y, s.center.z, s.center.x}, s.radius};
}

int parity_of(const std::array<int, 4>& order) {
  int p = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (order[i] > order[j]) p = -p;
  return p;
}

// Everything needed to answer conflict queries against one admissible plane.
struct PlaneCase {
  int tau;           // tangency-tetra sign in the quadruple's input order
  int root;          // +1 / -1: which root of the quadratic
  bool l_branch;     // plane came from the degenerate projection route
  bool equal_radius; // circumsphere branch
  // Shared quadratic data (barred E-forms).
  Quantity coef2, coef1, disc;      // 2nd/1st coefficient and discriminant
  Quantity gate;                    // E^{xyz} (M branch) or E^{xyp} (L branch)
  QVec rv, pv;                      // R- and P-vectors of E determinants
  Quantity exyr;                    // L branch d-numerator
  // Equal-radius branch.
  Vec3 circ_v;
  Rational circ_den = 0, common_r = 0;
  // Inversion context.
  Site pole;
  int rotations = 0;
  TangentPlaneW value;  // exact coefficients for callers and tests
};

// Conflict sign of query against the plane; exact, division-free.
Sign conflict_sign(const PlaneCase& pc, const Site& query, DegreeLog* log) {
  if (pc.equal_radius) {
    // Compare |den|*||Cq - v/den|| with |den|*(R + rq - r); pc.disc carries
    // (den*R)^2, so the root becomes a clean one-square-root test.
    auto q = [](const Rational& v) { return Quantity::input(v); };
    Quantity den(pc.circ_den, 3);
    Vec3 d{pc.circ_den * query.center.x - pc.circ_v.x,
           pc.circ_den * query.center.y - pc.circ_v.y,
           pc.circ_den * query.center.z - pc.circ_v.z};
    Quantity dd(dot(d, d), 8);
    Quantity t = q(query.radius) - q(pc.common_r);
    const Quantity& rr = pc.disc;
    QuadExt lhs{dd - rr - den * den * t * t, -2 * t * Quantity(abs(pc.circ_den), 3), rr};
    return sign_of(lhs, log, "insphere");
  }
  Site qr = query;
  for (int t = 0; t < pc.rotations; ++t) qr = rotate_axes(qr);
  InvertedSite iq = invert_about(qr, pc.pole);
  Sign pbs = sign_of(iq.pb.value);
  if (pbs == Sign::Zero) throw PoleDegeneracy();
  if (pbs == Sign::Negative) {
    // The query and the pole site contain one another; the vertex sphere
    // passes through the pole center, which settles the answer outright.
    return -sign_of(iq.rb.value);
  }
  QVec xq{iq.xb, iq.yb, iq.zb};
  Quantity pt = pc.l_branch
                    ? dotq(pc.rv, xq) + pc.exyr * iq.pb - iq.rb * pc.gate
                    : dotq(pc.rv, xq) - iq.rb * pc.gate;
  Quantity qt = pc.l_branch ? dotq(pc.pv, xq) : -dotq(pc.pv, xq) + iq.pb * pc.gate;
  QuadExt g{2 * pc.coef2 * pt - pc.coef1 * qt, pc.root * qt, pc.disc};
  return sign_of(g, log, "insphere") * sign_of(pc.gate.value);
}

std::optional<std::vector<PlaneCase>> equal_radius_planes(const Site* quad[4],
                                                          DegreeLog* log);

// Builds the admissible tangent planes of the quadruple in its input order.
std::vector<PlaneCase> tangent_plane_cases(const Site& s1, const Site& s2, const Site& s3,
                                           const Site& s4, DegreeLog* log) {
  const Site* quad[4] = {&s1, &s2, &s3, &s4};
  for (int p = 0; p < 4; ++p)
    for (int t = p + 1; t < 4; ++t)
      if (contained(*quad[p], *quad[t])) throw ContainedSites();

  if (s1.radius == s2.radius && s2.radius == s3.radius && s3.radius == s4.radius) {
    auto eq = equal_radius_planes(quad, log);
    if (eq) return *eq;
    throw InfinitelyMany();
  }

  int pole = 0;
  for (int t = 1; t < 4; ++t)
    if (quad[t]->radius < quad[pole]->radius) pole = t;
  std::array<int, 4> order{};
  int t = 0;
  for (int s = 0; s < 4; ++s)
    if (s != pole) order[t++] = s;
  order[3] = pole;
  int parity = parity_of(order);

  Site sites[4] = {*quad[0], *quad[1], *quad[2], *quad[3]};
  int rotations = 0;
  for (; rotations <= 3; ++rotations) {
    if (rotations == 3) throw InfinitelyMany();  // collinear inverted centers
    InvertedSite inv[3];
    int w = 0;
    for (int s = 0; s < 4; ++s) {
      if (s == pole) continue;
      inv[w] = invert_about(sites[s], sites[pole]);
      if (inv[w].pb.value == 0) throw PoleDegeneracy();
      if (sgn(inv[w].pb.value) < 0) throw ContainedSites();
      ++w;
    }
    Quantity exyz = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::Z);
    Quantity exyp = e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::P);
    if (exyz.value == 0 && exyp.value == 0) {
      for (auto& s : sites) s = rotate_axes(s);
      continue;
    }

    QVec rv{e3(inv[0], inv[1], inv[2], Axis::Y, Axis::Z, Axis::R),
            -e3(inv[0], inv[1], inv[2], Axis::X, Axis::Z, Axis::R),
            e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::R)};
    QVec pv{e3(inv[0], inv[1], inv[2], Axis::Y, Axis::Z, Axis::P),
            -e3(inv[0], inv[1], inv[2], Axis::X, Axis::Z, Axis::P),
            exyp};

    // Cleared cross product of the inverted-center differences: the common
    // normal of the three centers' plane in the inverted space.
    QVec b0{inv[0].xb, inv[0].yb, inv[0].zb};
    QVec b1{inv[1].xb, inv[1].yb, inv[1].zb};
    QVec b2{inv[2].xb, inv[2].yb, inv[2].zb};
    QVec w1{inv[0].pb * b1.x - inv[1].pb * b0.x, inv[0].pb * b1.y - inv[1].pb * b0.y,
            inv[0].pb * b1.z - inv[1].pb * b0.z};
    QVec w2{inv[0].pb * b2.x - inv[2].pb * b0.x, inv[0].pb * b2.y - inv[2].pb * b0.y,
            inv[0].pb * b2.z - inv[2].pb * b0.z};
    QVec wt = crossq(w1, w2);

    std::vector<PlaneCase> out;
    if (exyz.value != 0) {
      Quantity m2 = dotq(pv, pv);
      Quantity m1 = -2 * dotq(rv, pv);
      Quantity m0 = dotq(rv, rv) - exyz * exyz;
      Quantity disc = m1 * m1 - 4 * m2 * m0;
      Sign sd = sign_of(disc.value);
      if (sd == Sign::Negative) return out;
      if (sd == Sign::Zero) throw DegenerateDouble();
      for (int root : {+1, -1}) {
        QuadExt d{-m1, Quantity::constant(root), disc};
        if (sign_of(d, log, "insphere") != Sign::Positive) continue;
        PlaneCase pc;
        pc.root = root;
        pc.l_branch = false;
        pc.equal_radius = false;
        pc.coef2 = m2;
        pc.coef1 = m1;
        pc.disc = disc;
        pc.gate = exyz;
        pc.rv = rv;
        pc.pv = pv;
        pc.pole = sites[pole];
        pc.rotations = rotations;
        // lambda = (plane normal) . (centers-plane normal); the tangency
        // tetra keeps the quadruple's order when parity * lambda < 0.
        QuadExt lam{2 * m2 * dotq(wt, rv) + m1 * dotq(wt, pv),
                    Quantity::constant(-root) * dotq(wt, pv), disc};
        Sign ls = sign_of(lam, log, "insphere") * sign_of(exyz.value);
        if (ls == Sign::Zero) throw DegenerateAnswer("insphere: flat tangency tetrahedron");
        pc.tau = parity * sign_int(ls);
        // Exact plane value: d = (-m1 + root*sqrt(disc)) / (2 m2), then
        // (a,b,c) by back substitution over E^{xyz}.
        Ext dval = Ext{-m1.value, Rational(root), disc.value} / Ext(2 * m2.value);
        Ext ax = (Ext(rv.x.value) - dval * Ext(pv.x.value)) / Ext(exyz.value);
        Ext bx = (Ext(rv.y.value) - dval * Ext(pv.y.value)) / Ext(exyz.value);
        Ext cx = (Ext(rv.z.value) - dval * Ext(pv.z.value)) / Ext(exyz.value);
        pc.value.inverted = true;
        pc.value.a = ax;
        pc.value.b = bx;
        pc.value.c = cx;
        pc.value.d = dval;
        pc.value.pole = static_cast<std::size_t>(pole);
        out.push_back(std::move(pc));
      }
      return out;
    }

    // Projection route: E^{xyz} == 0, E^{xyp} != 0 after rotations.
    QVec rl{-e3(inv[0], inv[1], inv[2], Axis::Y, Axis::R, Axis::P),
            e3(inv[0], inv[1], inv[2], Axis::X, Axis::R, Axis::P), Quantity::constant(0)};
    Quantity exyr = rv.z;
    Quantity l2 = dotq(pv, pv);
    Quantity l1 = 2 * dotq(rl, pv);
    Quantity l0 = dotq(rl, rl) - exyp * exyp;
    Quantity disc = l1 * l1 - 4 * l2 * l0;
    Sign dsig = sign_of(exyr, log, "insphere") * sign_of(exyp, log, "insphere");
    Sign sd = sign_of(disc.value);
    if (sd == Sign::Negative || dsig == Sign::Negative) return out;
    if (dsig == Sign::Zero) return out;  // both planes pass through the origin
    if (sd == Sign::Zero) throw DegenerateDouble();
    for (int root : {+1, -1}) {
      PlaneCase pc;
      pc.root = root;
      pc.l_branch = true;
      pc.equal_radius = false;
      pc.coef2 = l2;
      pc.coef1 = l1;
      pc.disc = disc;
      pc.gate = exyp;
      pc.rv = rl;
      pc.pv = pv;
      pc.exyr = exyr;
      pc.pole = sites[pole];
      pc.rotations = rotations;
      QuadExt lam{2 * l2 * dotq(wt, rl) - l1 * dotq(wt, pv),
                  Quantity::constant(root) * dotq(wt, pv), disc};
      Sign ls = sign_of(lam, log, "insphere") * sign_of(exyp.value);
      if (ls == Sign::Zero) throw DegenerateAnswer("insphere: flat tangency tetrahedron");
      pc.tau = parity * sign_int(ls);
      Ext cval = Ext{-l1.value, Rational(root), disc.value} / Ext(2 * l2.value);
      Ext ax = (Ext(rl.x.value) + cval * Ext(pv.x.value)) / Ext(exyp.value);
      Ext bx = (Ext(rl.y.value) + cval * Ext(pv.y.value)) / Ext(exyp.value);
      Ext dval = Ext(exyr.value) / Ext(exyp.value);
      pc.value.inverted = true;
      pc.value.a = ax;
      pc.value.b = bx;
      pc.value.c = cval;
      pc.value.d = dval;
      pc.value.pole = static_cast<std::size_t>(pole);
      out.push_back(std::move(pc));
    }
    return out;
  }
  throw InfinitelyMany();
}

std::optional<std::vector<PlaneCase>> equal_radius_planes(const Site* quad[4],
                                                          DegreeLog* log) {
  auto q = [](const Rational& v) { return Quantity::input(v); };
  const Vec3& c0 = quad[0]->center;
  Vec3 u = quad[1]->center - c0, v = quad[2]->center - c0, w = quad[3]->center - c0;
  std::array<std::array<Quantity, 3>, 3> m = {{{q(u.x), q(u.y), q(u.z)},
                                               {q(v.x), q(v.y), q(v.z)},
                                               {q(w.x), q(w.y), q(w.z)}}};
  Quantity flat = det3(m);
  Sign fs = sign_of(flat, log, "insphere");
  if (fs == Sign::Zero) {
    // Flat quadruple: either no tangent sphere or infinitely many.
    DegreeLog scratch;
    if (existence(*quad[0], *quad[1], *quad[2], *quad[3], &scratch) ==
        ExistenceCount::Infinite)
      return std::nullopt;
    return std::vector<PlaneCase>{};
  }
  // Circumcenter cleared of denominators.
  Rational rhs[3];
  const Vec3* cs[3] = {&quad[1]->center, &quad[2]->center, &quad[3]->center};
  for (int n = 0; n < 3; ++n) rhs[n] = (dot(*cs[n], *cs[n]) - dot(c0, c0)) / 2;
  Rational den = flat.value;
  Vec3 vnum;
  Rational* out[3] = {&vnum.x, &vnum.y, &vnum.z};
  for (int col = 0; col < 3; ++col) {
    auto mm = m;
    for (int r = 0; r < 3; ++r) mm[r][col] = Quantity(rhs[r], 2);
    *out[col] = det3(mm).value;
  }
  Quantity denq(den, 3);
  Vec3 d{vnum.x - den * c0.x, vnum.y - den * c0.y, vnum.z - den * c0.z};
  Quantity r2_scaled(dot(d, d), 8);  // (den * circumradius)^2
  Quantity rr = denq * denq * q(quad[0]->radius) * q(quad[0]->radius);
  Sign big = sign_of(r2_scaled - rr, log, "insphere");
  if (big == Sign::Negative) return std::vector<PlaneCase>{};  // circumsphere too small
  if (big == Sign::Zero) throw DegenerateDouble();             // point tangent sphere

  PlaneCase pc;
  pc.root = +1;
  pc.l_branch = false;
  pc.equal_radius = true;
  pc.tau = sign_int(fs);
  pc.circ_v = vnum;
  pc.circ_den = den;
  pc.common_r = quad[0]->radius;
  pc.disc = r2_scaled;
  pc.value.inverted = false;
  pc.value.circum_v = vnum;
  pc.value.circum_den = den;
  return std::vector<PlaneCase>{std::move(pc)};
}

}  // namespace

std::vector<ClassifiedPlane> classify_tangent_planes(const Site& s1, const Site& s2,
                                                     const Site& s3, const Site& s4,
                                                     DegreeLog* log) {
  std::vector<ClassifiedPlane> out;
  for (const auto& pc : tangent_plane_cases(s1, s2, s3, s4, log)) {
    out.push_back({pc.tau < 0 ? Orientation::Ijk : Orientation::Ikj, pc.value});
  }
  return out;
}

Sign insphere(const Site& s1, const Site& s2, const Site& s3, const Site& s4,
              const Site& q, DegreeLog* log) {
  auto cases = tangent_plane_cases(s1, s2, s3, s4, log);
  for (const auto& pc : cases) {
    if (pc.tau < 0) return conflict_sign(pc, q, log);
  }
  throw VertexNotFound();
}

}  // namespace apo
