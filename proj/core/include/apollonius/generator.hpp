#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apollonius/oracle.hpp"

namespace apo {

// Deterministic 64-bit generator (splitmix64); identical streams across
// platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform integer in [lo, hi].
  long range(long lo, long hi);
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  long coord_range = 8;       // integer grid for centers
  long radius_quarters = 8;   // radii are k/4, k in [1, radius_quarters]
};

// One random site on the integer grid with quarter-integer radius.
Site random_site(Rng& rng, const GeneratorConfig& cfg);

// n pairwise non-contained sites with distinct centers.
std::vector<Site> random_sites(Rng& rng, int n, const GeneratorConfig& cfg);

// A site tuple (i,j,k) with a hyperbolic trisector, or nullopt after the
// given number of attempts.
std::optional<std::vector<Site>> random_hyperbolic_triple(Rng& rng, int attempts,
                                                          const GeneratorConfig& cfg);

// A valid finite edge (i,j,k,l,m): v_{ijkl} and v_{ikjm} exist with
// v_{ijkl} before v_{ikjm}, confirmed by the numeric oracle.
std::optional<EdgeSpec> random_edge(Rng& rng, int attempts, const GeneratorConfig& cfg);

// Exact rigid/uniform transforms used by the invariance suite.
Site translate(const Site& s, const Vec3& d);
Site add_radius(const Site& s, const Rational& c);
Site scale(const Site& s, const Rational& f);
// Rotation by the rational orthogonal matrix built from the 3-4-5 and
// 5-12-13 triples (a z-rotation composed with an x-rotation).
Site rotate(const Site& s);

}  // namespace apo
