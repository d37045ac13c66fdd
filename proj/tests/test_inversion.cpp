#include <doctest.h>

#include "apollonius/generator.hpp"
#include "apollonius/inversion.hpp"

using namespace apo;

namespace {

Site site(long x, long y, long z, const Rational& r) {
  return {{Rational(x), Rational(y), Rational(z)}, r};
}

const Site fix_i = site(0, 0, 0, 1);
const Site fix_j = site(4, 0, 0, 1);
const Site fix_k = site(2, 4, 0, 1);

}  // namespace

TEST_CASE("radius reduction and inversion about a pole") {
  std::vector<Site> sites = {fix_i, fix_j, fix_k};
  auto inv = reduce_and_invert(sites, 2);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0].xb.value == -2);
  CHECK(inv[0].yb.value == -4);
  CHECK(inv[0].zb.value == 0);
  CHECK(inv[0].rb.value == 0);
  CHECK(inv[0].pb.value == 20);
  CHECK(inv[0].u == make_rational(-1, 10));
  CHECK(inv[0].v == make_rational(-1, 5));
  CHECK(inv[0].w == 0);
  CHECK(inv[0].rho == 0);
  CHECK(inv[1].u == make_rational(1, 10));
  CHECK(inv[1].v == make_rational(-1, 5));
  CHECK(inv[1].pb.value == 20);

  CHECK(inv[0].xb.degree == 1);
  CHECK(inv[0].pb.degree == 2);

  std::vector<Site> twin = {fix_i, fix_i, fix_k};
  CHECK_THROWS_AS(reduce_and_invert(twin, 0), PoleDegeneracy);
}

TEST_CASE("determinant queries") {
  Site p0 = site(0, 0, 0, 0), p1 = site(1, 0, 0, 0), p2 = site(0, 1, 0, 0);
  DetQuery q{DetQuery::Kind::D2Ones, "xy"};
  CHECK(det(q, {p0, p1, p2}, {}).value == 1);
  Site c0 = site(0, 0, 0, 0), c1 = site(1, 1, 0, 0), c2 = site(2, 2, 0, 0);
  CHECK(det(q, {c0, c1, c2}, {}).value == 0);
  CHECK_THROWS_AS(det(q, {p0, p1}, {}), ShapeMismatch);
  CHECK_THROWS_AS(det(DetQuery{DetQuery::Kind::E3, "xyq"}, {}, {}), ShapeMismatch);

  // E^{xyz} degree 3, E^{xyzp} degree 5.
  auto inv = reduce_and_invert({fix_i, fix_j, fix_k, site(2, 1, 5, 1)}, 3);
  CHECK(det(DetQuery{DetQuery::Kind::E3, "xyz"}, {}, inv).degree == 3);
  CHECK(det(DetQuery{DetQuery::Kind::E3, "xyp"}, {}, inv).degree == 4);
  // Degree-5 four-row form needs a fourth inverted site.
  auto inv5 = reduce_and_invert({fix_i, fix_j, fix_k, site(2, 1, 5, 1), site(1, 2, 3, 2)}, 4);
  CHECK(det(DetQuery{DetQuery::Kind::E4, "xyzp"}, {}, inv5).degree == 5);
}

TEST_CASE("orient3d convention") {
  Vec3 a{0, 0, 0}, b{1, 0, 0}, c{0, 1, 0};
  CHECK(orient3d({0, 0, 1}, a, b, c) == Sign::Positive);
  CHECK(orient3d({1, 1, 0}, a, b, c) == Sign::Zero);
  CHECK(orient3d({0, 0, -1}, a, b, c) == Sign::Negative);
}

TEST_CASE("D/E sign identity over inverted coordinates") {
  // sign D^{pi theta}_{ijk} over (u,v,w,rho) equals the matching barred E
  // sign, since the p-bar products are positive.
  Rng rng(2026);
  GeneratorConfig cfg;
  int done = 0;
  while (done < 40) {
    auto sites = random_sites(rng, 4, cfg);
    if (sites.size() != 4) continue;
    std::vector<InvertedSite> inv;
    try {
      inv = reduce_and_invert(sites, 0);
    } catch (const PredicateError&) {
      continue;
    }
    // Build D^{uv} style determinant from the exact inverted values.
    auto dsign = [&](Rational InvertedSite::*c0, Rational InvertedSite::*c1) {
      std::array<std::array<Quantity, 3>, 3> m;
      for (int r = 0; r < 3; ++r)
        m[r] = {Quantity(inv[r].*c0, 0), Quantity(inv[r].*c1, 0), Quantity::constant(1)};
      return sign_of(det3(m).value);
    };
    CHECK(dsign(&InvertedSite::u, &InvertedSite::v) ==
          sign_of(e3(inv[0], inv[1], inv[2], Axis::X, Axis::Y, Axis::P).value));
    CHECK(dsign(&InvertedSite::u, &InvertedSite::rho) ==
          sign_of(e3(inv[0], inv[1], inv[2], Axis::X, Axis::R, Axis::P).value));
    CHECK(dsign(&InvertedSite::v, &InvertedSite::w) ==
          sign_of(e3(inv[0], inv[1], inv[2], Axis::Y, Axis::Z, Axis::P).value));
    ++done;
  }
}

TEST_CASE("orientation transfers through inversion") {
  // Orient3D(inv Cn, inv Ci, inv Cj, O) = Orient3D(Cn, Ci, Cj, Ck) with the
  // pole at site k.
  Rng rng(7);
  GeneratorConfig cfg;
  int done = 0;
  while (done < 60) {
    auto sites = random_sites(rng, 4, cfg);
    if (sites.size() != 4) continue;
    const Site &n = sites[0], &i = sites[1], &j = sites[2], &k = sites[3];
    std::vector<InvertedSite> inv;
    try {
      inv = reduce_and_invert({n, i, j, k}, 3);
    } catch (const PredicateError&) {
      continue;
    }
    Vec3 wn{inv[0].u, inv[0].v, inv[0].w};
    Vec3 wi{inv[1].u, inv[1].v, inv[1].w};
    Vec3 wj{inv[2].u, inv[2].v, inv[2].w};
    Sign lhs = orient3d(wn, wi, wj, Vec3{0, 0, 0});
    Sign rhs = orient3d(n.center, i.center, j.center, k.center);
    if (rhs == Sign::Zero) continue;
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("point inversion round trip") {
  // The inversion map is an involution on points: applying it twice about
  // the same pole restores the input exactly.
  Vec3 pole{1, 2, 3};
  auto invert_point = [&](const Vec3& z) {
    Vec3 d = z - pole;
    Rational n = dot(d, d);
    return pole + Vec3{d.x / n, d.y / n, d.z / n};
  };
  for (auto z : {Vec3{5, 1, -2}, Vec3{make_rational(1, 3), 7, 0}, Vec3{-4, -4, -4}}) {
    Vec3 back = invert_point(invert_point(z));
    CHECK(back.x == z.x);
    CHECK(back.y == z.y);
    CHECK(back.z == z.z);
  }
}
