#include "apollonius/edge_conflict.hpp"

#include <optional>

#include "apollonius/errors.hpp"

namespace apo {

namespace {

// Position of one query vertex against the reference endpoint vertex inside
// an ordering: -1 before, +1 after.
struct RelPos {
  std::optional<int> chi;  // v_{ikjq}
  std::optional<int> phi;  // v_{ijkq}
};

RelPos relative_to(const Ordering& seq, Orientation ref_orient) {
  int ref = -1;
  for (std::size_t t = 0; t < seq.size(); ++t)
    if (seq[t].site == 0 && seq[t].orient == ref_orient) ref = static_cast<int>(t);
  if (ref < 0) throw InvalidEdge();
  RelPos out;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (seq[t].site != 1) continue;
    int side = static_cast<int>(t) < ref ? -1 : +1;
    if (seq[t].orient == Orientation::Ikj) out.chi = side;
    else out.phi = side;
  }
  return out;
}

// 0 = before the left endpoint, 1 = inside the edge, 2 = past the right one.
int region_of(int vs_left, int vs_right) {
  if (vs_left < 0 && vs_right < 0) return 0;
  if (vs_left > 0 && vs_right > 0) return 2;
  if (vs_left > 0 && vs_right < 0) return 1;
  throw InvalidEdge();  // after the right endpoint yet before the left one
}

}  // namespace

EdgeConflictResult edge_conflict(const EdgeSpec& edge, const Site& q, DegreeLog* log) {
  if (trisector(edge.i, edge.j, edge.k, log) != TrisectorType::Hyperbolic)
    throw NotHyperbolic();

  ShadowType srt = shadow(edge.i, edge.j, edge.k, q, log);
  if (srt == ShadowType::Empty) return EdgeConflictResult::NoConflict;
  if (srt == ShadowType::Full) return EdgeConflictResult::EntireEdge;

  bool has_chi = srt == ShadowType::RightRay || srt == ShadowType::Interval ||
                 srt == ShadowType::TwoRays;
  bool has_phi = srt == ShadowType::LeftRay || srt == ShadowType::Interval ||
                 srt == ShadowType::TwoRays;

  RelPos vs_left = relative_to(order(edge.i, edge.j, edge.k, edge.l, q, log),
                               Orientation::Ijk);
  if (has_chi != vs_left.chi.has_value() || has_phi != vs_left.phi.has_value())
    throw DegenerateEdgeConflict("shadow type disagrees with vertex count");

  // When every query vertex sits left of the edge, the second ordering is
  // not needed.
  bool all_left = (!has_chi || *vs_left.chi < 0) && (!has_phi || *vs_left.phi < 0);
  RelPos vs_right;
  if (all_left) {
    if (has_chi) vs_right.chi = -1;
    if (has_phi) vs_right.phi = -1;
  } else {
    vs_right = relative_to(order(edge.i, edge.j, edge.k, edge.m, q, log),
                           Orientation::Ikj);
    if (has_chi != vs_right.chi.has_value() || has_phi != vs_right.phi.has_value())
      throw DegenerateEdgeConflict("shadow type disagrees with vertex count");
  }

  std::optional<int> chi_region, phi_region;
  if (has_chi) chi_region = region_of(*vs_left.chi, *vs_right.chi);
  if (has_phi) phi_region = region_of(*vs_left.phi, *vs_right.phi);

  // Intersect the shadow with the open edge interval, symbolically: regions
  // 0/1/2 give each shadow endpoint a coordinate; within a shared region the
  // shadow's own endpoint order (chi < phi for an interval, phi < chi for two
  // rays) breaks the tie. The edge spans (10, 20).
  constexpr int kLeftEnd = 10, kRightEnd = 20;
  bool chi_first = srt != ShadowType::TwoRays;
  auto coord = [&](int region, bool is_chi) {
    return region * 10 + ((is_chi == chi_first) ? 4 : 6);
  };
  constexpr int kInf = 1000;
  struct Interval {
    int lo, hi;
  };
  Interval parts[2];
  int nparts = 0;
  switch (srt) {
    case ShadowType::LeftRay: parts[nparts++] = {-kInf, coord(*phi_region, false)}; break;
    case ShadowType::RightRay: parts[nparts++] = {coord(*chi_region, true), kInf}; break;
    case ShadowType::Interval:
      if (*chi_region > *phi_region) throw InvalidEdge();
      parts[nparts++] = {coord(*chi_region, true), coord(*phi_region, false)};
      break;
    case ShadowType::TwoRays:
      if (*phi_region > *chi_region) throw InvalidEdge();
      parts[nparts++] = {-kInf, coord(*phi_region, false)};
      parts[nparts++] = {coord(*chi_region, true), kInf};
      break;
    default: break;
  }
  Interval clipped[2];
  int kept = 0;
  for (int t = 0; t < nparts; ++t) {
    int lo = parts[t].lo > kLeftEnd ? parts[t].lo : kLeftEnd;
    int hi = parts[t].hi < kRightEnd ? parts[t].hi : kRightEnd;
    if (lo < hi) clipped[kept++] = {lo, hi};
  }
  if (kept == 0) return EdgeConflictResult::NoConflict;
  if (kept == 2) return EdgeConflictResult::BothVertices;
  bool at_left = clipped[0].lo == kLeftEnd;
  bool at_right = clipped[0].hi == kRightEnd;
  if (at_left && at_right) return EdgeConflictResult::EntireEdge;
  if (at_left) return EdgeConflictResult::LeftVertex;
  if (at_right) return EdgeConflictResult::RightVertex;
  return EdgeConflictResult::Interior;
}

}  // namespace apo
