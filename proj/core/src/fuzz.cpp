#include "apollonius/fuzz.hpp"

#include <cmath>
#include <sstream>

#include "apollonius/scene.hpp"

namespace apo {

namespace {

std::string describe(const std::vector<Site>& sites) {
  std::ostringstream out;
  for (const auto& s : sites)
    out << "((" << to_string(s.center.x) << ',' << to_string(s.center.y) << ','
        << to_string(s.center.z) << ")," << to_string(s.radius) << ") ";
  return out.str();
}

bool pairwise_free(const std::vector<Site>& sites) {
  for (std::size_t a = 0; a < sites.size(); ++a)
    for (std::size_t b = a + 1; b < sites.size(); ++b)
      if (same_center(sites[a], sites[b]) || contained(sites[a], sites[b]) ||
          contained(sites[b], sites[a]))
        return false;
  return true;
}

struct Harness {
  const FuzzConfig& cfg;
  FuzzReport& rep;
  DegreeLog log;

  void note_degrees() {
    if (log.max_degree() > rep.max_degree) rep.max_degree = log.max_degree();
    int aux = log.max_degree("order.orient3d");
    if (aux > rep.max_aux_orient_degree) rep.max_aux_orient_degree = aux;
    log.clear();
  }

  void outcome(bool oracle_decisive, bool same, const std::vector<Site>& sites,
               const std::string& what) {
    ++rep.generated;
    note_degrees();
    if (!oracle_decisive) {
      ++rep.discarded;
      return;
    }
    ++rep.compared;
    if (same) {
      ++rep.agreed;
    } else if (rep.first_disagreement.empty()) {
      rep.first_disagreement = what + " on " + describe(sites);
    }
  }

  void degenerate() {
    ++rep.generated;
    ++rep.degenerate;
    note_degrees();
  }
};

void fuzz_incone(Rng& rng, Harness& h) {
  auto sites = random_sites(rng, 3, h.cfg.gen);
  if (sites.size() != 3) return;
  InConeResult exact;
  try {
    exact = incone(sites[0], sites[1], sites[2], &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  auto orc = oracle::incone(sites[0], sites[1], sites[2], h.cfg.guard);
  bool decisive = orc.has_value() &&
                  (exact == InConeResult::Inside || exact == InConeResult::Outside);
  h.outcome(decisive, decisive && exact == *orc, sites, "incone");
}

void fuzz_trisector(Rng& rng, Harness& h) {
  auto sites = random_sites(rng, 3, h.cfg.gen);
  if (sites.size() != 3) return;
  TrisectorType exact;
  try {
    exact = trisector(sites[0], sites[1], sites[2], &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  auto orc = oracle::trisector(sites[0], sites[1], sites[2], h.cfg.guard);
  h.outcome(orc.has_value(), orc && exact == *orc, sites, "trisector");
}

bool hyperbolic_base(Rng& rng, const FuzzConfig& cfg, std::vector<Site>& out) {
  auto tri = random_hyperbolic_triple(rng, 40, cfg.gen);
  if (!tri) return false;
  out = *tri;
  return true;
}

void fuzz_distance(Rng& rng, Harness& h) {
  std::vector<Site> sites;
  if (!hyperbolic_base(rng, h.cfg, sites)) return;
  sites.push_back(random_site(rng, h.cfg.gen));
  if (!pairwise_free(sites)) return;
  DistanceSigns exact;
  try {
    exact = distance(sites[0], sites[1], sites[2], sites[3], &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  auto orc = oracle::distance(sites[0], sites[1], sites[2], sites[3], h.cfg.guard);
  bool decisive = orc.has_value() && exact.minus_plane != Sign::Zero &&
                  exact.plus_plane != Sign::Zero;
  h.outcome(decisive,
            decisive && exact.minus_plane == orc->minus_plane &&
                exact.plus_plane == orc->plus_plane,
            sites, "distance");
}

int oracle_sphere_count(const std::vector<oracle::TangentSphere>& ts, double guard) {
  // Reject counts whose spheres sit too close to each other or to radius 0.
  for (const auto& t : ts)
    if (t.sphere.radius < guard) return -1;
  if (ts.size() == 2) {
    double d = 0;
    for (int c = 0; c < 3; ++c) {
      double diff = ts[0].sphere.center[c] - ts[1].sphere.center[c];
      d += diff * diff;
    }
    if (d < guard * guard) return -1;
  }
  return static_cast<int>(ts.size());
}

void fuzz_existence(Rng& rng, Harness& h) {
  auto sites = random_sites(rng, 4, h.cfg.gen);
  if (sites.size() != 4) return;
  ExistenceCount exact;
  try {
    exact = existence(sites[0], sites[1], sites[2], sites[3], &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  if (exact == ExistenceCount::OneDouble || exact == ExistenceCount::Infinite) {
    h.degenerate();
    return;
  }
  auto ts = oracle::tangent_spheres(sites[0], sites[1], sites[2], sites[3]);
  int n = ts ? oracle_sphere_count(*ts, h.cfg.guard) : -1;
  int want = exact == ExistenceCount::Zero ? 0 : (exact == ExistenceCount::One ? 1 : 2);
  h.outcome(n >= 0, n >= 0 && n == want, sites, "existence");
}

void fuzz_shadow(Rng& rng, Harness& h) {
  std::vector<Site> sites;
  if (!hyperbolic_base(rng, h.cfg, sites)) return;
  sites.push_back(random_site(rng, h.cfg.gen));
  if (!pairwise_free(sites)) return;
  ShadowType exact;
  try {
    exact = shadow(sites[0], sites[1], sites[2], sites[3], &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  auto orc = oracle::classify_shadow(sites[0], sites[1], sites[2], sites[3], h.cfg.guard);
  h.outcome(orc.has_value(), orc && exact == orc->type, sites, "shadow");
}

void fuzz_insphere(Rng& rng, Harness& h) {
  auto sites = random_sites(rng, 5, h.cfg.gen);
  if (sites.size() != 5) return;
  Sign exact;
  bool missing = false;
  try {
    exact = insphere(sites[0], sites[1], sites[2], sites[3], sites[4], &h.log);
  } catch (const VertexNotFound&) {
    missing = true;
    exact = Sign::Zero;
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  auto ts = oracle::tangent_spheres(sites[0], sites[1], sites[2], sites[3]);
  if (!ts) {
    h.outcome(false, false, sites, "insphere");
    return;
  }
  const oracle::TangentSphere* target = nullptr;
  bool ambiguous = false;
  for (const auto& t : *ts) {
    if (t.orientation == 0) ambiguous = true;
    if (t.orientation == -1) target = &t;
  }
  if (ambiguous) {
    h.outcome(false, false, sites, "insphere");
    return;
  }
  if (!target) {
    h.outcome(true, missing, sites, "insphere missing-vertex");
    return;
  }
  if (missing) {
    h.outcome(true, false, sites, "insphere vertex-found");
    return;
  }
  double dx = sites[4].center.x.get_d() - target->sphere.center[0];
  double dy = sites[4].center.y.get_d() - target->sphere.center[1];
  double dz = sites[4].center.z.get_d() - target->sphere.center[2];
  double d = std::sqrt(dx * dx + dy * dy + dz * dz) - target->sphere.radius -
             sites[4].radius.get_d();
  bool decisive = std::abs(d) > h.cfg.guard;
  Sign want = d < 0 ? Sign::Negative : Sign::Positive;
  h.outcome(decisive, decisive && exact == want, sites, "insphere");
}

void fuzz_order(Rng& rng, Harness& h) {
  std::vector<Site> sites;
  if (!hyperbolic_base(rng, h.cfg, sites)) return;
  auto extra = random_sites(rng, 2, h.cfg.gen);
  if (extra.size() != 2) return;
  sites.push_back(extra[0]);
  sites.push_back(extra[1]);
  if (!pairwise_free(sites)) return;
  for (int n = 3; n <= 4; ++n) {
    try {
      ShadowType t = shadow(sites[0], sites[1], sites[2], sites[n]);
      if (t == ShadowType::Empty || t == ShadowType::Full) return;
    } catch (const PredicateError&) {
      return;
    }
  }
  Ordering exact;
  try {
    exact = order(sites[0], sites[1], sites[2], sites[3], sites[4], &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  }
  auto orc = oracle::vertex_order(sites[0], sites[1], sites[2], sites[3], sites[4],
                                  h.cfg.guard > 1e-5 ? h.cfg.guard : 1e-5);
  bool same = false;
  if (orc && orc->size() == exact.size()) {
    same = true;
    for (std::size_t t = 0; t < exact.size(); ++t)
      if (!((*orc)[t].label == exact[t])) same = false;
  }
  h.outcome(orc.has_value(), same, sites, "order");
}

void fuzz_edge_conflict(Rng& rng, Harness& h) {
  auto edge = random_edge(rng, 60, h.cfg.gen);
  if (!edge) return;
  Site q = random_site(rng, h.cfg.gen);
  std::vector<Site> all = {edge->i, edge->j, edge->k, edge->l, edge->m, q};
  for (const Site* s : {&edge->i, &edge->j, &edge->k})
    if (same_center(q, *s) || contained(q, *s) || contained(*s, q)) return;
  if (same_center(q, edge->l) || same_center(q, edge->m)) return;
  EdgeConflictResult exact;
  try {
    exact = edge_conflict(*edge, q, &h.log);
  } catch (const DegenerateError&) {
    h.degenerate();
    return;
  } catch (const InvalidEdge&) {
    h.degenerate();
    return;
  }
  auto orc = oracle::edge_conflict(*edge, q, h.cfg.guard);
  h.outcome(orc.has_value(), orc && exact == *orc, all, "edge-conflict");
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  Rng rng(cfg.seed);
  FuzzReport rep;
  Harness h{cfg, rep, {}};
  long guardrail = cfg.count * 4000 + 1000;
  while (rep.generated < cfg.count && guardrail-- > 0) {
    if (cfg.predicate == "incone") fuzz_incone(rng, h);
    else if (cfg.predicate == "trisector") fuzz_trisector(rng, h);
    else if (cfg.predicate == "distance") fuzz_distance(rng, h);
    else if (cfg.predicate == "existence") fuzz_existence(rng, h);
    else if (cfg.predicate == "shadow") fuzz_shadow(rng, h);
    else if (cfg.predicate == "insphere") fuzz_insphere(rng, h);
    else if (cfg.predicate == "order") fuzz_order(rng, h);
    else if (cfg.predicate == "edge-conflict") fuzz_edge_conflict(rng, h);
    else throw ParseError("unknown predicate: " + cfg.predicate);
  }
  return rep;
}

std::string format_report(const FuzzConfig& cfg, const FuzzReport& rep) {
  std::ostringstream out;
  out << cfg.predicate << ": compared " << rep.compared << ", agreed " << rep.agreed
      << ", discarded " << rep.discarded << ", degenerate " << rep.degenerate
      << ", max_degree " << rep.max_degree;
  if (rep.max_aux_orient_degree > 0)
    out << ", max_aux_orient_degree " << rep.max_aux_orient_degree;
  if (!rep.first_disagreement.empty()) out << "\n  DISAGREEMENT: " << rep.first_disagreement;
  return out.str();
}

}  // namespace apo
