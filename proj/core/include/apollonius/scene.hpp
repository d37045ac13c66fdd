#pragma once

#include <map>
#include <string>
#include <vector>

#include "apollonius/site.hpp"

namespace apo {

// A named collection of sites, as read from a scene file. Lines look like
//   site <id> <x> <y> <z> <r>
// with integers, p/q rationals, or finite decimals; '#' starts a comment.
struct Scene {
  std::map<std::string, Site> sites;

  const Site& at(const std::string& id) const;
};

Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);
std::string serialize(const Scene& scene);

std::string to_string(const Rational& q);

}  // namespace apo
