#include "apollonius/order.hpp"

#include <array>

#include "apollonius/errors.hpp"

namespace apo {

namespace {

// Orient3D(C_n, C_i, C_j, O) in the inverted space equals the plain 3x3
// determinant of pole-relative coordinates; degree 3 in the inputs.
Sign orient_center_plane(const Site& n, const Site& i, const Site& j, const Site& pole,
                         DegreeLog* log) {
  auto q = [](const Rational& v) { return Quantity::input(v); };
  Vec3 rn = n.center - pole.center;
  Vec3 ri = i.center - pole.center;
  Vec3 rj = j.center - pole.center;
  std::array<std::array<Quantity, 3>, 3> m = {{{q(rn.x), q(rn.y), q(rn.z)},
                                               {q(ri.x), q(ri.y), q(ri.z)},
                                               {q(rj.x), q(rj.y), q(rj.z)}}};
  return sign_of(det3(m), log, "order.orient3d");
}

// Orient3D of inverted centers (C_b, C_i, C_j, C_a): the E^{xyzp} form,
// degree 5 in the inputs.
Sign orient_inverted(const Site& b, const Site& i, const Site& j, const Site& a,
                     const Site& pole, DegreeLog* log) {
  InvertedSite rows[4] = {invert_about(b, pole), invert_about(i, pole),
                          invert_about(j, pole), invert_about(a, pole)};
  for (auto& r : rows) {
    if (r.pb.value == 0) throw PoleDegeneracy();
    if (sgn(r.pb.value) < 0) throw ContainedSites();
  }
  Quantity q = e4(rows[0], rows[1], rows[2], rows[3], Axis::X, Axis::Y, Axis::Z, Axis::P);
  return sign_of(q, log, "order.orient3d");
}

struct ExtraSite {
  const Site* site;
  int id;           // 0 or 1 in the caller's (a,b) order
  bool flipped;     // true when the shadow type was non-classic
  bool interval;    // effective type: interval vs right ray
};

Sign insphere_adj(const Site& first, const Site& second, const Site& third,
                  const ExtraSite& def, const ExtraSite& query, DegreeLog* log) {
  // Equivalent-sphere reduction: a flipped defining site swaps the middle
  // pair; a flipped query negates the answer.
  Sign r = def.flipped ? insphere(first, third, second, *def.site, *query.site, log)
                       : insphere(first, second, third, *def.site, *query.site, log);
  if (r == Sign::Zero) throw DegenerateOrder("zero InSphere during order");
  return query.flipped ? -r : r;
}

VertexLabel lab(Orientation o, const ExtraSite& s) {
  return {s.flipped ? flip(o) : o, s.id};
}

Ordering order_classic(const Site& i, const Site& j, const Site& k, const Site& pole,
                       const ExtraSite& a, const ExtraSite& b, DegreeLog* log) {
  using O = Orientation;
  if (a.interval && b.interval) {
    // Four vertices; the Q-tuple pins one of six interleavings.
    Sign q1 = insphere_adj(i, k, j, b, a, log);
    Sign q2 = insphere_adj(i, j, k, b, a, log);
    Sign q3 = insphere_adj(i, k, j, a, b, log);
    Sign q4 = insphere_adj(i, j, k, a, b, log);
    auto t = [&](Sign s1, Sign s2, Sign s3, Sign s4) {
      return q1 == s1 && q2 == s2 && q3 == s3 && q4 == s4;
    };
    constexpr Sign P = Sign::Positive, N = Sign::Negative;
    int oc;
    if (t(N, P, P, N)) oc = 2;
    else if (t(P, P, N, N)) oc = 3;
    else if (t(P, N, N, P)) oc = 4;
    else if (t(N, N, P, P)) oc = 6;
    else if (t(P, P, P, P)) {
      Sign o1 = orient_center_plane(*a.site, i, j, pole, log);
      Sign o2 = orient_center_plane(*b.site, i, j, pole, log);
      if (a.flipped) o1 = -o1;
      if (b.flipped) o2 = -o2;
      if (o1 * o2 == Sign::Positive) {
        Sign o3 = orient_inverted(*b.site, i, j, *a.site, pole, log);
        if (a.flipped) o3 = -o3;
        if (b.flipped) o3 = -o3;
        if (o3 == Sign::Zero) throw DegenerateOrder("tie-break orientation vanished");
        oc = o3 == Sign::Negative ? 1 : 5;
      } else {
        if (o1 == o2) throw DegenerateOrder("tie-break midpoints coincide");
        oc = sign_int(o1) < sign_int(o2) ? 1 : 5;
      }
    } else {
      throw DegenerateOrder("InSphere tuple matches no ordering");
    }
    switch (oc) {
      case 1: return {lab(O::Ikj, a), lab(O::Ijk, a), lab(O::Ikj, b), lab(O::Ijk, b)};
      case 2: return {lab(O::Ikj, a), lab(O::Ikj, b), lab(O::Ijk, a), lab(O::Ijk, b)};
      case 3: return {lab(O::Ikj, b), lab(O::Ikj, a), lab(O::Ijk, a), lab(O::Ijk, b)};
      case 4: return {lab(O::Ikj, b), lab(O::Ikj, a), lab(O::Ijk, b), lab(O::Ijk, a)};
      case 5: return {lab(O::Ikj, b), lab(O::Ijk, b), lab(O::Ikj, a), lab(O::Ijk, a)};
      default: return {lab(O::Ikj, a), lab(O::Ikj, b), lab(O::Ijk, b), lab(O::Ijk, a)};
    }
  }
  if (!a.interval && !b.interval) {
    // Two right rays: a single test orders the two surviving vertices.
    Sign q1 = insphere_adj(i, k, j, a, b, log);
    if (q1 == Sign::Positive) return {lab(O::Ikj, a), lab(O::Ikj, b)};
    return {lab(O::Ikj, b), lab(O::Ikj, a)};
  }
  if (a.interval && !b.interval) {
    Sign q1 = insphere_adj(i, k, j, b, a, log);
    Sign q2 = insphere_adj(i, k, j, a, b, log);
    Sign q3 = insphere_adj(i, j, k, a, b, log);
    constexpr Sign P = Sign::Positive, N = Sign::Negative;
    if (q1 == P && q2 == P && q3 == P)
      return {lab(O::Ikj, a), lab(O::Ijk, a), lab(O::Ikj, b)};
    if (q1 == N && q2 == P && q3 == N)
      return {lab(O::Ikj, a), lab(O::Ikj, b), lab(O::Ijk, a)};
    if (q1 == P && q2 == N && q3 == N)
      return {lab(O::Ikj, b), lab(O::Ikj, a), lab(O::Ijk, a)};
    throw DegenerateOrder("InSphere tuple matches no ordering");
  }
  // Mirror case: swap roles and reuse.
  return order_classic(i, j, k, pole, b, a, log);
}

}  // namespace

Ordering order(const Site& i_in, const Site& j_in, const Site& k_in, const Site& a,
               const Site& b, DegreeLog* log) {
  // Cyclic rotation so the smallest-radius trisector site is the inversion
  // pole; vertex labels are invariant under it.
  const Site* tri[3] = {&i_in, &j_in, &k_in};
  int mpos = 0;
  for (int t = 1; t < 3; ++t)
    if (tri[t]->radius < tri[mpos]->radius) mpos = t;
  int rot = (mpos + 1) % 3;
  for (int t = 0; t < rot; ++t) {
    const Site* tmp = tri[0];
    tri[0] = tri[1];
    tri[1] = tri[2];
    tri[2] = tmp;
  }
  const Site &i = *tri[0], &j = *tri[1], &k = *tri[2];

  ShadowType sha = shadow(i, j, k, a, log);
  ShadowType shb = shadow(i, j, k, b, log);
  for (ShadowType t : {sha, shb})
    if (t == ShadowType::Empty || t == ShadowType::Full)
      throw PreconditionError("order: site has no Apollonius vertex on the trisector");

  ExtraSite ea{&a, 0, sha == ShadowType::LeftRay || sha == ShadowType::TwoRays,
               sha == ShadowType::Interval || sha == ShadowType::TwoRays};
  ExtraSite eb{&b, 1, shb == ShadowType::LeftRay || shb == ShadowType::TwoRays,
               shb == ShadowType::Interval || shb == ShadowType::TwoRays};
  return order_classic(i, j, k, k, ea, eb, log);
}

}  // namespace apo
