#include "apollonius/generator.hpp"

namespace apo {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
}

Site random_site(Rng& rng, const GeneratorConfig& cfg) {
  Site s;
  s.center = {Rational(rng.range(-cfg.coord_range, cfg.coord_range)),
              Rational(rng.range(-cfg.coord_range, cfg.coord_range)),
              Rational(rng.range(-cfg.coord_range, cfg.coord_range))};
  s.radius = make_rational(rng.range(1, cfg.radius_quarters), 4);
  return s;
}

std::vector<Site> random_sites(Rng& rng, int n, const GeneratorConfig& cfg) {
  std::vector<Site> out;
  int guardrail = 0;
  while (static_cast<int>(out.size()) < n && ++guardrail < 10000) {
    Site s = random_site(rng, cfg);
    bool ok = true;
    for (const Site& t : out)
      if (same_center(s, t) || contained(s, t) || contained(t, s)) ok = false;
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

std::optional<std::vector<Site>> random_hyperbolic_triple(Rng& rng, int attempts,
                                                          const GeneratorConfig& cfg) {
  for (int t = 0; t < attempts; ++t) {
    auto sites = random_sites(rng, 3, cfg);
    if (sites.size() != 3) continue;
    try {
      if (trisector(sites[0], sites[1], sites[2]) == TrisectorType::Hyperbolic)
        return sites;
    } catch (const PredicateError&) {
    }
  }
  return std::nullopt;
}

std::optional<EdgeSpec> random_edge(Rng& rng, int attempts, const GeneratorConfig& cfg) {
  for (int t = 0; t < attempts; ++t) {
    auto tri = random_hyperbolic_triple(rng, 20, cfg);
    if (!tri) continue;
    auto sites = random_sites(rng, 2, cfg);
    if (sites.size() != 2) continue;
    EdgeSpec edge{(*tri)[0], (*tri)[1], (*tri)[2], sites[0], sites[1]};
    bool clash = false;
    for (const Site* a : {&edge.l, &edge.m})
      for (const Site* b : {&edge.i, &edge.j, &edge.k})
        if (same_center(*a, *b) || contained(*a, *b) || contained(*b, *a)) clash = true;
    if (same_center(edge.l, edge.m) || contained(edge.l, edge.m) || contained(edge.m, edge.l))
      clash = true;
    if (clash) continue;
    // The edge is genuine when l's forward vertex precedes m's swapped one.
    auto origin = oracle::trisector_origin(edge.i, edge.j, edge.k);
    if (!origin) continue;
    auto tl = oracle::tangent_spheres(edge.i, edge.j, edge.k, edge.l);
    auto tm = oracle::tangent_spheres(edge.i, edge.j, edge.k, edge.m);
    if (!tl || !tm) continue;
    std::optional<double> lam, mu;
    for (const auto& s : *tl)
      if (s.orientation < 0)
        lam = oracle::map_value(s.sphere.center, edge.i, edge.j, edge.k, *origin);
    for (const auto& s : *tm)
      if (s.orientation > 0)
        mu = oracle::map_value(s.sphere.center, edge.i, edge.j, edge.k, *origin);
    if (!lam || !mu || *mu - *lam < 1e-4) continue;
    return edge;
  }
  return std::nullopt;
}

Site translate(const Site& s, const Vec3& d) { return {s.center + d, s.radius}; }

Site add_radius(const Site& s, const Rational& c) { return {s.center, s.radius + c}; }

Site scale(const Site& s, const Rational& f) {
  return {{s.center.x * f, s.center.y * f, s.center.z * f}, s.radius * f};
}

Site rotate(const Site& s) {
  // Rz(3-4-5) then Rx(5-12-13), both exactly orthogonal over the rationals.
  Rational c1 = make_rational(3, 5), s1 = make_rational(4, 5);
  Rational c2 = make_rational(5, 13), s2 = make_rational(12, 13);
  const Vec3& p = s.center;
  Vec3 q{c1 * p.x - s1 * p.y, s1 * p.x + c1 * p.y, p.z};
  Vec3 r{q.x, c2 * q.y - s2 * q.z, s2 * q.y + c2 * q.z};
  return {r, s.radius};
}

}  // namespace apo
