#include <doctest.h>

#include "apollonius/errors.hpp"
#include "apollonius/scene.hpp"

using namespace apo;

TEST_CASE("scene parsing") {
  Scene s = parse_scene("site a 0 0 0 1\n");
  REQUIRE(s.sites.size() == 1);
  CHECK(s.at("a").radius == 1);

  Scene t = parse_scene("# comment\nsite a 1/3 0 0 0.25\n\nsite b 0 0 0 2 # inline\n");
  CHECK(t.at("a").center.x == make_rational(1, 3));
  CHECK(t.at("a").radius == make_rational(1, 4));
  CHECK(t.at("b").radius == 2);
}

TEST_CASE("scene parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_scene("site a 0 0 0 -1\n"),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_scene("site a 0 0 0 1\nsite a 1 1 1 1\n"),
                       doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_AS(parse_scene("sphere a 0 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scene("site a 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_scene("site a 0 0 zero 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scene("site a 0 0 0 1 9\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  Scene s = parse_scene(
      "site a -7/3 0.125 4 1\n"
      "site bb 1 2 3 0.75\n"
      "site z9 0 0 0 11/7\n");
  Scene t = parse_scene(serialize(s));
  REQUIRE(t.sites.size() == s.sites.size());
  for (const auto& [id, st] : s.sites) {
    const Site& rt = t.at(id);
    CHECK(rt.center.x == st.center.x);
    CHECK(rt.center.y == st.center.y);
    CHECK(rt.center.z == st.center.z);
    CHECK(rt.radius == st.radius);
  }
}
