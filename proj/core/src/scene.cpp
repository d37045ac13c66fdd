#include "apollonius/scene.hpp"

#include <fstream>
#include <sstream>

#include "apollonius/errors.hpp"

namespace apo {

const Site& Scene::at(const std::string& id) const {
  auto it = sites.find(id);
  if (it == sites.end()) throw ParseError("unknown site id: " + id);
  return it->second;
}

Scene parse_scene(const std::string& text) {
  Scene scene;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word != "site")
      throw ParseError("line " + std::to_string(lineno) + ": expected 'site', got '" +
                       word + "'");
    std::string id, xs, ys, zs, rs;
    if (!(ls >> id >> xs >> ys >> zs >> rs))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'site <id> <x> <y> <z> <r>'");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (scene.sites.count(id))
      throw ParseError("line " + std::to_string(lineno) + ": duplicate id '" + id + "'");
    Site s;
    try {
      s.center = {parse_rational(xs), parse_rational(ys), parse_rational(zs)};
      s.radius = parse_rational(rs);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (sgn(s.radius) < 0)
      throw ParseError("line " + std::to_string(lineno) + ": negative radius");
    scene.sites.emplace(id, std::move(s));
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scene file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << q.get_num().get_str();
  if (q.get_den() != 1) out << '/' << q.get_den().get_str();
  return out.str();
}

std::string serialize(const Scene& scene) {
  std::ostringstream out;
  for (const auto& [id, s] : scene.sites) {
    out << "site " << id << ' ' << to_string(s.center.x) << ' ' << to_string(s.center.y)
        << ' ' << to_string(s.center.z) << ' ' << to_string(s.radius) << '\n';
  }
  return out.str();
}

}  // namespace apo
