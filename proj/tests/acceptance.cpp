// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apollonius/edge_conflict.hpp"
#include "apollonius/fuzz.hpp"
#include "apollonius/scene.hpp"

using namespace apo;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++failures;
}

Site site(const Rational& x, const Rational& y, const Rational& z, const Rational& r) {
  return {{x, y, z}, r};
}

const Rational half = make_rational(1, 2);
const Site fh_i = site(0, 0, 0, 1);
const Site fh_j = site(4, 0, 0, 1);
const Site fh_k = site(2, 4, 0, 1);

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- criterion 1: the fixture chain ---------------------------------------

void criterion_fixture_chain() {
  auto t0 = std::chrono::steady_clock::now();
  Site a = site(2, 1, 5, 1);
  bool ok = trisector(fh_i, fh_j, fh_k) == TrisectorType::Hyperbolic;
  DistanceSigns d = distance(fh_i, fh_j, fh_k, a);
  ok = ok && d.minus_plane == Sign::Positive && d.plus_plane == Sign::Negative;
  ok = ok && existence(fh_i, fh_j, fh_k, a) == ExistenceCount::One;
  ok = ok && shadow(fh_i, fh_j, fh_k, a) == ShadowType::RightRay;
  double ms = ms_since(t0);
  ok = ok && ms < 1000.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "fixture chain: HYPERBOLIC, (POS,NEG), ONE, RIGHT_RAY in %.1f ms", ms);
  report(1, ok, buf);
}

// ---- criterion 2: edge-conflict fixtures ----------------------------------

void criterion_edge_fixtures() {
  EdgeSpec e{fh_i, fh_j, fh_k, site(2, 1, 0, half), site(2, 1, 20, 1)};
  struct Case {
    Site q;
    EdgeConflictResult want;
    const char* name;
  } cases[] = {
      {site(2, 1, 12, 1), EdgeConflictResult::RightVertex, "RIGHT_VERTEX"},
      {site(2, 1, 0, make_rational(1, 4)), EdgeConflictResult::NoConflict, "NO_CONFLICT"},
      {site(2, 1, 7, half), EdgeConflictResult::EntireEdge, "ENTIRE_EDGE"},
  };
  bool ok = true;
  std::string detail = "edge fixtures:";
  for (const auto& c : cases) {
    auto orc = oracle::edge_conflict(e, c.q);
    bool this_ok = orc && *orc == c.want && edge_conflict(e, c.q) == c.want;
    ok = ok && this_ok;
    detail += std::string(" ") + c.name + (this_ok ? "+" : "!");
  }
  report(2, ok, detail);
}

// ---- criteria 3 and 4: fuzz agreement and degree bounds --------------------

struct FuzzOutcome {
  std::map<std::string, FuzzReport> reports;
  double seconds = 0;
};

FuzzOutcome run_fuzz_campaign(long count) {
  const char* predicates[] = {"incone",  "trisector", "distance", "existence",
                              "shadow",  "insphere",  "order",    "edge-conflict"};
  FuzzOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  for (const char* p : predicates) {
    FuzzConfig cfg;
    cfg.predicate = p;
    cfg.count = count;
    cfg.seed = 20260808;
    out.reports[p] = run_fuzz(cfg);
  }
  out.seconds = ms_since(t0) / 1000.0;
  return out;
}

void criterion_fuzz(const FuzzOutcome& fz, long count) {
  bool ok = fz.seconds < 600.0;
  long total_compared = 0;
  std::string bad;
  for (const auto& [name, rep] : fz.reports) {
    total_compared += rep.compared;
    if (rep.generated < count) {
      ok = false;
      bad += " " + name + ":short";
    }
    if (!rep.clean()) {
      ok = false;
      bad += " " + name + ":disagree(" + rep.first_disagreement + ")";
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "oracle fuzz: %ld instances/predicate, %ld compared, 100%%%s "
                "agreement in %.1f s%s",
                count, total_compared, bad.empty() ? "" : " NOT", fz.seconds,
                bad.c_str());
  report(3, ok, buf);
}

void criterion_degrees(const FuzzOutcome& fz, int aux_from_tables) {
  struct Bound {
    const char* name;
    int bound;
  } bounds[] = {{"incone", 4}, {"trisector", 4}, {"distance", 6},
                {"existence", 8}, {"shadow", 8}};
  bool ok = true;
  std::string detail = "degrees:";
  for (const auto& b : bounds) {
    int got = fz.reports.at(b.name).max_degree;
    bool this_ok = got <= b.bound;
    ok = ok && this_ok;
    detail += std::string(" ") + b.name + "=" + std::to_string(got) + "<=" +
              std::to_string(b.bound) + (this_ok ? "" : "!");
  }
  int aux = aux_from_tables;
  for (const char* p : {"order", "edge-conflict"})
    aux = std::max(aux, fz.reports.at(p).max_aux_orient_degree);
  bool aux_ok = aux > 0 && aux <= 5;
  ok = ok && aux_ok;
  detail += " order.aux_orient=" + std::to_string(aux) + "<=5" + (aux_ok ? "" : "!");
  int deep = 0;
  for (const char* p : {"insphere", "order", "edge-conflict"})
    deep = std::max(deep, fz.reports.at(p).max_degree);
  detail += "; insphere/order/edge measured max=" + std::to_string(deep) +
            " (design target 10" +
            (deep > 10 ? "; excess is the documented quadratic-extension formulation gap)"
                       : ")");
  report(4, ok, detail);
}

// ---- criterion 5: invariance under exact transforms ------------------------

struct Transformed {
  const char* name;
  Site (*apply)(const Site&);
};

Site tf_shift(const Site& s) { return add_radius(s, make_rational(5, 4)); }
Site tf_translate(const Site& s) {
  return translate(s, Vec3{make_rational(7, 2), -3, make_rational(11, 5)});
}
Site tf_rotate(const Site& s) { return rotate(s); }
Site tf_scale(const Site& s) { return scale(s, make_rational(7, 3)); }

void criterion_invariance() {
  constexpr Transformed transforms[] = {{"radius-shift", tf_shift},
                                        {"translate", tf_translate},
                                        {"rotate", tf_rotate},
                                        {"scale", tf_scale}};
  Rng rng(424242);
  GeneratorConfig cfg;
  long instances = 0;
  long checks = 0;
  bool ok = true;
  std::string first_bad;
  auto mismatch = [&](const char* what, const char* tf) {
    ok = false;
    if (first_bad.empty()) first_bad = std::string(what) + " under " + tf;
  };
  while (instances < 1000) {
    auto sites = random_sites(rng, 6, cfg);
    if (sites.size() != 6) continue;
    ++instances;
    // Base outputs; preconditions may reject parts of the tuple.
    std::optional<InConeResult> ic;
    std::optional<TrisectorType> tt;
    std::optional<DistanceSigns> ds;
    std::optional<ExistenceCount> ex;
    std::optional<ShadowType> sh;
    std::optional<Sign> is;
    std::optional<Ordering> od;
    std::optional<EdgeConflictResult> ec;
    try {
      ic = incone(sites[0], sites[1], sites[2]);
      tt = trisector(sites[0], sites[1], sites[2]);
    } catch (const PredicateError&) {
    }
    try {
      ex = existence(sites[0], sites[1], sites[2], sites[3]);
    } catch (const PredicateError&) {
    }
    if (tt == TrisectorType::Hyperbolic) {
      try {
        ds = distance(sites[0], sites[1], sites[2], sites[3]);
        sh = shadow(sites[0], sites[1], sites[2], sites[3]);
      } catch (const PredicateError&) {
      }
      try {
        od = order(sites[0], sites[1], sites[2], sites[3], sites[4]);
      } catch (const PredicateError&) {
      }
      try {
        EdgeSpec e{sites[0], sites[1], sites[2], sites[3], sites[4]};
        ec = edge_conflict(e, sites[5]);
      } catch (const PredicateError&) {
      }
    }
    try {
      is = insphere(sites[0], sites[1], sites[2], sites[3], sites[4]);
    } catch (const PredicateError&) {
    }

    for (const auto& tf : transforms) {
      std::vector<Site> t;
      for (const auto& s : sites) t.push_back(tf.apply(s));
      try {
        if (ic && incone(t[0], t[1], t[2]) != *ic) mismatch("incone", tf.name);
        if (tt && trisector(t[0], t[1], t[2]) != *tt) mismatch("trisector", tf.name);
        if (ex && existence(t[0], t[1], t[2], t[3]) != *ex) mismatch("existence", tf.name);
        if (ds) {
          DistanceSigns d2 = distance(t[0], t[1], t[2], t[3]);
          if (d2.minus_plane != ds->minus_plane || d2.plus_plane != ds->plus_plane)
            mismatch("distance", tf.name);
        }
        if (sh && shadow(t[0], t[1], t[2], t[3]) != *sh) mismatch("shadow", tf.name);
        if (is && insphere(t[0], t[1], t[2], t[3], t[4]) != *is)
          mismatch("insphere", tf.name);
        if (od && !(order(t[0], t[1], t[2], t[3], t[4]) == *od)) mismatch("order", tf.name);
        if (ec) {
          EdgeSpec e{t[0], t[1], t[2], t[3], t[4]};
          if (edge_conflict(e, t[5]) != *ec) mismatch("edge-conflict", tf.name);
        }
        checks += (ic ? 1 : 0) + (tt ? 1 : 0) + (ex ? 1 : 0) + (ds ? 1 : 0) +
                  (sh ? 1 : 0) + (is ? 1 : 0) + (od ? 1 : 0) + (ec ? 1 : 0);
      } catch (const PredicateError&) {
        mismatch("exception asymmetry", tf.name);
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "invariance: %ld instances, %ld transformed checks%s%s", instances,
                checks, ok ? ", all unchanged" : ", FIRST MISMATCH: ",
                first_bad.c_str());
  report(5, ok, buf);
}

// ---- criterion 6: ordering case tables -------------------------------------

struct TableCampaign {
  std::map<std::string, int> buckets;
  int tie_2a = 0, tie_2b = 0;
  int aux_orient_max = 0;
  bool mismatch = false;
  std::string first_bad;
};

// Oracle interval of a site's shadow, with margins against the other's.
struct IntervalInfo {
  Site s;
  double chi, phi;
};

void case_a_pair(const Site& i, const Site& j, const Site& k, const IntervalInfo& a,
                 const IntervalInfo& b, TableCampaign& tc) {
  // Oracle ordering of the four endpoints decides the expected OrderCase.
  struct E {
    double v;
    int who;  // 0: chi_a, 1: phi_a, 2: chi_b, 3: phi_b
  } ends[4] = {{a.chi, 0}, {a.phi, 1}, {b.chi, 2}, {b.phi, 3}};
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (std::abs(ends[x].v - ends[y].v) < 1e-5) return;
  std::sort(ends, ends + 4, [](const E& x, const E& y) { return x.v < y.v; });
  std::string pattern;
  for (const auto& e : ends) pattern += "abcd"[e.who];
  int oc;
  if (pattern == "abcd") oc = 1;
  else if (pattern == "acbd") oc = 2;
  else if (pattern == "cabd") oc = 3;
  else if (pattern == "cadb") oc = 4;
  else if (pattern == "cdab") oc = 5;
  else if (pattern == "acdb") oc = 6;
  else return;

  DegreeLog log;
  Sign q1, q2, q3, q4;
  try {
    q1 = insphere(i, k, j, b.s, a.s, &log);
    q2 = insphere(i, j, k, b.s, a.s, &log);
    q3 = insphere(i, k, j, a.s, b.s, &log);
    q4 = insphere(i, j, k, a.s, b.s, &log);
  } catch (const PredicateError&) {
    return;
  }
  constexpr Sign P = Sign::Positive, N = Sign::Negative;
  const std::array<std::array<Sign, 4>, 7> table = {{
      {},          // unused slot 0
      {P, P, P, P},
      {N, P, P, N},
      {P, P, N, N},
      {P, N, N, P},
      {P, P, P, P},
      {N, N, P, P},
  }};
  std::array<Sign, 4> got = {q1, q2, q3, q4};
  if (got != table[oc]) {
    tc.mismatch = true;
    if (tc.first_bad.empty()) tc.first_bad = "case A tuple vs OrderCase " + std::to_string(oc);
    return;
  }
  if (oc == 1 || oc == 5) {
    // Tie-break path coverage requires the full order() evaluation.
    Ordering want, got_order;
    try {
      got_order = order(i, j, k, a.s, b.s, &log);
    } catch (const PredicateError&) {
      return;
    }
    using O = Orientation;
    want = oc == 1 ? Ordering{{O::Ikj, 0}, {O::Ijk, 0}, {O::Ikj, 1}, {O::Ijk, 1}}
                   : Ordering{{O::Ikj, 1}, {O::Ijk, 1}, {O::Ikj, 0}, {O::Ijk, 0}};
    if (!(got_order == want)) {
      tc.mismatch = true;
      if (tc.first_bad.empty()) tc.first_bad = "tie-break ordering OrderCase " + std::to_string(oc);
      return;
    }
    // Which tie-break step ran: the product of the center-plane orientations.
    Sign o1 = orient3d(a.s.center, i.center, j.center, k.center);
    Sign o2 = orient3d(b.s.center, i.center, j.center, k.center);
    if (o1 * o2 == Sign::Positive) ++tc.tie_2a;
    else ++tc.tie_2b;
  } else {
    using O = Orientation;
    const std::map<int, Ordering> want{
        {2, {{O::Ikj, 0}, {O::Ikj, 1}, {O::Ijk, 0}, {O::Ijk, 1}}},
        {3, {{O::Ikj, 1}, {O::Ikj, 0}, {O::Ijk, 0}, {O::Ijk, 1}}},
        {4, {{O::Ikj, 1}, {O::Ikj, 0}, {O::Ijk, 1}, {O::Ijk, 0}}},
        {6, {{O::Ikj, 0}, {O::Ikj, 1}, {O::Ijk, 1}, {O::Ijk, 0}}}};
    Ordering got_order;
    try {
      got_order = order(i, j, k, a.s, b.s, &log);
    } catch (const PredicateError&) {
      return;
    }
    if (!(got_order == want.at(oc))) {
      tc.mismatch = true;
      if (tc.first_bad.empty()) tc.first_bad = "ordering vs OrderCase " + std::to_string(oc);
      return;
    }
  }
  tc.aux_orient_max = std::max(tc.aux_orient_max, log.max_degree("order.orient3d"));
  tc.buckets["A" + std::to_string(oc)]++;
}

void case_b_pair(const Site& i, const Site& j, const Site& k, const Site& sa, double chi_a,
                 const Site& sb, double chi_b, TableCampaign& tc) {
  if (std::abs(chi_a - chi_b) < 1e-5) return;
  int oc = chi_a < chi_b ? 1 : 2;
  Sign q1;
  try {
    q1 = insphere(i, k, j, sa, sb);
  } catch (const PredicateError&) {
    return;
  }
  Sign want = oc == 1 ? Sign::Positive : Sign::Negative;
  if (q1 != want) {
    tc.mismatch = true;
    if (tc.first_bad.empty()) tc.first_bad = "case B tuple vs OrderCase " + std::to_string(oc);
    return;
  }
  tc.buckets["B" + std::to_string(oc)]++;
}

void case_c_pair(const Site& i, const Site& j, const Site& k, const IntervalInfo& a,
                 const Site& sb, double chi_b, TableCampaign& tc) {
  double gaps[2] = {std::abs(chi_b - a.chi), std::abs(chi_b - a.phi)};
  if (gaps[0] < 1e-5 || gaps[1] < 1e-5) return;
  int oc;
  if (a.phi < chi_b) oc = 1;
  else if (a.chi < chi_b && chi_b < a.phi) oc = 2;
  else oc = 3;
  Sign q1, q2, q3;
  try {
    q1 = insphere(i, k, j, sb, a.s);
    q2 = insphere(i, k, j, a.s, sb);
    q3 = insphere(i, j, k, a.s, sb);
  } catch (const PredicateError&) {
    return;
  }
  constexpr Sign P = Sign::Positive, N = Sign::Negative;
  const Sign table[4][3] = {{}, {P, P, P}, {N, P, N}, {P, N, N}};
  if (q1 != table[oc][0] || q2 != table[oc][1] || q3 != table[oc][2]) {
    tc.mismatch = true;
    if (tc.first_bad.empty()) tc.first_bad = "case C tuple vs OrderCase " + std::to_string(oc);
    return;
  }
  tc.buckets["C" + std::to_string(oc)]++;
}

// Candidate sites pooled per trisector and bucketed by oracle shadow shape.
TableCampaign run_tables(std::string& detail, bool& ok) {
  Rng rng(600613);
  GeneratorConfig cfg;
  cfg.coord_range = 6;
  TableCampaign tc;
  const int need = 20;
  auto satisfied = [&] {
    for (const char* key : {"A1", "A2", "A3", "A4", "A5", "A6", "B1", "B2", "C1", "C2", "C3"})
      if (tc.buckets[key] < need) return false;
    return tc.tie_2a >= 3 && tc.tie_2b >= 3;
  };
  auto t0 = std::chrono::steady_clock::now();
  int trisectors = 0;
  while (!satisfied() && ms_since(t0) < 240000.0) {
    auto tri = random_hyperbolic_triple(rng, 40, cfg);
    if (!tri) continue;
    const Site &i = (*tri)[0], &j = (*tri)[1], &k = (*tri)[2];
    ++trisectors;
    std::vector<IntervalInfo> intervals;
    std::vector<std::pair<Site, double>> right_rays;
    for (int n = 0; n < 90; ++n) {
      Site s = random_site(rng, cfg);
      bool bad = false;
      for (const Site* t : {&i, &j, &k})
        if (same_center(s, *t) || contained(s, *t) || contained(*t, s)) bad = true;
      if (bad) continue;
      ShadowType st;
      try {
        st = shadow(i, j, k, s);
      } catch (const PredicateError&) {
        continue;
      }
      if (st != ShadowType::Interval && st != ShadowType::RightRay) continue;
      auto cls = oracle::classify_shadow(i, j, k, s);
      if (!cls || cls->type != st) continue;
      if (st == ShadowType::Interval)
        intervals.push_back({s, cls->endpoints[0], cls->endpoints[1]});
      else
        right_rays.push_back({s, cls->endpoints[0]});
    }
    auto pair_ok = [](const Site& x, const Site& y) {
      return !same_center(x, y) && !contained(x, y) && !contained(y, x);
    };
    for (std::size_t x = 0; x < intervals.size(); ++x)
      for (std::size_t y = 0; y < intervals.size(); ++y) {
        if (x == y || !pair_ok(intervals[x].s, intervals[y].s)) continue;
        case_a_pair(i, j, k, intervals[x], intervals[y], tc);
      }
    for (std::size_t x = 0; x < right_rays.size(); ++x)
      for (std::size_t y = x + 1; y < right_rays.size(); ++y) {
        if (!pair_ok(right_rays[x].first, right_rays[y].first)) continue;
        case_b_pair(i, j, k, right_rays[x].first, right_rays[x].second,
                    right_rays[y].first, right_rays[y].second, tc);
        case_b_pair(i, j, k, right_rays[y].first, right_rays[y].second,
                    right_rays[x].first, right_rays[x].second, tc);
      }
    for (const auto& iv : intervals)
      for (const auto& rr : right_rays) {
        if (!pair_ok(iv.s, rr.first)) continue;
        case_c_pair(i, j, k, iv, rr.first, rr.second, tc);
      }
  }
  ok = satisfied() && !tc.mismatch;
  detail = "tables:";
  for (const char* key : {"A1", "A2", "A3", "A4", "A5", "A6", "B1", "B2", "C1", "C2", "C3"})
    detail += std::string(" ") + key + "=" + std::to_string(tc.buckets[key]);
  detail += " tie2a=" + std::to_string(tc.tie_2a) + " tie2b=" + std::to_string(tc.tie_2b);
  detail += " (trisectors " + std::to_string(trisectors) + ")";
  if (tc.mismatch) detail += " MISMATCH: " + tc.first_bad;
  return tc;
}

// ---- criterion 7: cross-predicate consistency laws -------------------------

void criterion_consistency() {
  Rng rng(777000);
  GeneratorConfig cfg;
  long instances = 0, endpoint_checks = 0, sigma_checks = 0, lemma_checks = 0,
       subseq_checks = 0;
  bool ok = true;
  std::string first_bad;
  auto fail = [&](const char* what) {
    ok = false;
    if (first_bad.empty()) first_bad = what;
  };
  while (instances < 2000) {
    auto tri = random_hyperbolic_triple(rng, 40, cfg);
    if (!tri) continue;
    const Site &i = (*tri)[0], &j = (*tri)[1], &k = (*tri)[2];
    auto extra = random_sites(rng, 2, cfg);
    if (extra.size() != 2) continue;
    const Site& a = extra[0];
    bool bad = false;
    for (const Site* t : {&i, &j, &k})
      if (same_center(a, *t) || contained(a, *t) || contained(*t, a)) bad = true;
    if (bad) continue;
    ++instances;
    ShadowType st;
    ExistenceCount e;
    DistanceSigns d;
    try {
      st = shadow(i, j, k, a);
      e = existence(i, j, k, a);
      d = distance(i, j, k, a);
    } catch (const PredicateError&) {
      continue;
    }
    int want = e == ExistenceCount::Zero ? 0 : (e == ExistenceCount::One ? 1 : 2);
    ++endpoint_checks;
    if (shadow_endpoint_count(st) != want) fail("endpoint count != existence");
    bool inc_minus = st == ShadowType::Full || st == ShadowType::LeftRay ||
                     st == ShadowType::TwoRays;
    bool inc_plus = st == ShadowType::Full || st == ShadowType::RightRay ||
                    st == ShadowType::TwoRays;
    ++sigma_checks;
    if ((d.minus_plane == Sign::Negative) != inc_minus) fail("sigma- vs -inf end");
    if ((d.plus_plane == Sign::Negative) != inc_plus) fail("sigma+ vs +inf end");
    // Endpoint orientations per the endpoint lemma, via oracle tags.
    if (st == ShadowType::Interval || st == ShadowType::TwoRays) {
      auto ts = oracle::tangent_spheres(i, j, k, a);
      auto origin = oracle::trisector_origin(i, j, k);
      if (ts && ts->size() == 2 && origin) {
        double m0 = oracle::map_value((*ts)[0].sphere.center, i, j, k, *origin);
        double m1 = oracle::map_value((*ts)[1].sphere.center, i, j, k, *origin);
        if (std::abs(m0 - m1) > 1e-5 && (*ts)[0].orientation != 0 &&
            (*ts)[1].orientation != 0) {
          int small_tag = m0 < m1 ? (*ts)[0].orientation : (*ts)[1].orientation;
          ++lemma_checks;
          if (st == ShadowType::Interval && small_tag != +1) fail("interval endpoint lemma");
          if (st == ShadowType::TwoRays && small_tag != -1) fail("two-rays endpoint lemma");
        }
      }
    }
    // Ordering subsequence coherence against both shadows.
    const Site& b = extra[1];
    Ordering od;
    ShadowType sb;
    try {
      sb = shadow(i, j, k, b);
      od = order(i, j, k, a, b);
    } catch (const PredicateError&) {
      continue;
    }
    for (int n = 0; n < 2; ++n) {
      ShadowType stn = n == 0 ? st : sb;
      std::vector<Orientation> sub;
      for (const auto& v : od)
        if (v.site == n) sub.push_back(v.orient);
      ++subseq_checks;
      std::size_t want_n = static_cast<std::size_t>(shadow_endpoint_count(stn));
      if (sub.size() != want_n) {
        fail("order subsequence size");
        continue;
      }
      if (stn == ShadowType::Interval &&
          !(sub[0] == Orientation::Ikj && sub[1] == Orientation::Ijk))
        fail("order subsequence interval");
      if (stn == ShadowType::TwoRays &&
          !(sub[0] == Orientation::Ijk && sub[1] == Orientation::Ikj))
        fail("order subsequence two-rays");
      if (stn == ShadowType::RightRay && sub[0] != Orientation::Ikj)
        fail("order subsequence right ray");
      if (stn == ShadowType::LeftRay && sub[0] != Orientation::Ijk)
        fail("order subsequence left ray");
    }
  }
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "consistency laws on %ld instances (endpoints %ld, sigma %ld, "
                "endpoint-lemma %ld, subsequences %ld)%s%s",
                instances, endpoint_checks, sigma_checks, lemma_checks, subseq_checks,
                ok ? "" : " FIRST: ", first_bad.c_str());
  report(7, ok, buf);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_fixture_chain();
  criterion_edge_fixtures();
  long fuzz_count = 10000;
  if (const char* env = std::getenv("ACCEPTANCE_FUZZ_COUNT")) fuzz_count = std::atol(env);
  FuzzOutcome fz = run_fuzz_campaign(fuzz_count);
  criterion_fuzz(fz, fuzz_count);
  std::string table_detail;
  bool table_ok = false;
  TableCampaign tc = run_tables(table_detail, table_ok);  // feeds criterion 4's aux degree
  criterion_degrees(fz, tc.aux_orient_max);
  criterion_invariance();
  report(6, table_ok, table_detail);
  criterion_consistency();
  std::printf("SUMMARY: %d/7 criteria passed in %.1f s\n", 7 - failures,
              ms_since(t0) / 1000.0);
  return failures == 0 ? 0 : 1;
}
