// Command-line front end: evaluate predicates on scene files, run the
// exact-vs-oracle fuzz harness, generate random scenes, and report degree
// audits.
//
// Exit codes: 0 success, 1 fuzz disagreement, 2 degenerate configuration,
// 3 precondition violation, 4 parse/arity errors.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "apollonius/edge_conflict.hpp"
#include "apollonius/fuzz.hpp"
#include "apollonius/scene.hpp"

namespace {

using namespace apo;

const char* sign_token(Sign s) {
  switch (s) {
    case Sign::Negative: return "NEG";
    case Sign::Zero: return "ZERO";
    case Sign::Positive: return "POS";
  }
  return "?";
}

const char* incone_token(InConeResult r) {
  switch (r) {
    case InConeResult::Outside: return "OUTSIDE";
    case InConeResult::Inside: return "INSIDE";
    case InConeResult::OnePointTouch: return "ONE_POINT_TOUCH";
    case InConeResult::CircleTouch: return "CIRCLE_TOUCH";
  }
  return "?";
}

const char* trisector_token(TrisectorType t) {
  switch (t) {
    case TrisectorType::Hyperbolic: return "HYPERBOLIC";
    case TrisectorType::Elliptic: return "ELLIPTIC";
    case TrisectorType::Parabolic: return "PARABOLIC";
  }
  return "?";
}

const char* existence_token(ExistenceCount e) {
  switch (e) {
    case ExistenceCount::Zero: return "ZERO";
    case ExistenceCount::One: return "ONE";
    case ExistenceCount::OneDouble: return "ONE_DOUBLE";
    case ExistenceCount::Two: return "TWO";
    case ExistenceCount::Infinite: return "INFINITE";
  }
  return "?";
}

const char* shadow_token(ShadowType t) {
  switch (t) {
    case ShadowType::Empty: return "EMPTY";
    case ShadowType::Full: return "FULL";
    case ShadowType::LeftRay: return "LEFT_RAY";
    case ShadowType::RightRay: return "RIGHT_RAY";
    case ShadowType::Interval: return "INTERVAL";
    case ShadowType::TwoRays: return "TWO_RAYS";
  }
  return "?";
}

const char* edge_token(EdgeConflictResult r) {
  switch (r) {
    case EdgeConflictResult::NoConflict: return "NO_CONFLICT";
    case EdgeConflictResult::EntireEdge: return "ENTIRE_EDGE";
    case EdgeConflictResult::LeftVertex: return "LEFT_VERTEX";
    case EdgeConflictResult::RightVertex: return "RIGHT_VERTEX";
    case EdgeConflictResult::BothVertices: return "BOTH_VERTICES";
    case EdgeConflictResult::Interior: return "INTERIOR";
  }
  return "?";
}

std::string ordering_token(const Ordering& seq, const std::string& a_id,
                           const std::string& b_id) {
  std::string out;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t) out += '<';
    out += "v_";
    out += seq[t].orient == Orientation::Ijk ? "ijk" : "ikj";
    out += ':';
    out += seq[t].site == 0 ? a_id : b_id;
  }
  return out;
}

int run_eval(const std::string& scene_path, const std::string& predicate,
             const std::vector<std::string>& ids, bool audit) {
  Scene scene = load_scene(scene_path);
  std::vector<const Site*> s;
  for (const auto& id : ids) s.push_back(&scene.at(id));
  auto arity = [&](std::size_t n) {
    if (s.size() != n)
      throw ParseError("predicate '" + predicate + "' expects " + std::to_string(n) +
                       " site ids, got " + std::to_string(s.size()));
  };
  DegreeLog log;
  std::string token;
  if (predicate == "incone") {
    arity(3);
    token = incone_token(incone(*s[0], *s[1], *s[2], &log));
  } else if (predicate == "trisector") {
    arity(3);
    token = trisector_token(trisector(*s[0], *s[1], *s[2], &log));
  } else if (predicate == "distance") {
    arity(4);
    DistanceSigns d = distance(*s[0], *s[1], *s[2], *s[3], &log);
    token = std::string(sign_token(d.minus_plane)) + "," + sign_token(d.plus_plane);
  } else if (predicate == "existence") {
    arity(4);
    token = existence_token(existence(*s[0], *s[1], *s[2], *s[3], &log));
  } else if (predicate == "shadow") {
    arity(4);
    token = shadow_token(shadow(*s[0], *s[1], *s[2], *s[3], &log));
  } else if (predicate == "insphere") {
    arity(5);
    token = sign_token(insphere(*s[0], *s[1], *s[2], *s[3], *s[4], &log));
  } else if (predicate == "order") {
    arity(5);
    token = ordering_token(order(*s[0], *s[1], *s[2], *s[3], *s[4], &log), ids[3], ids[4]);
  } else if (predicate == "edge-conflict") {
    arity(6);
    EdgeSpec edge{*s[0], *s[1], *s[2], *s[3], *s[4]};
    token = edge_token(edge_conflict(edge, *s[5], &log));
  } else {
    throw ParseError("unknown predicate: " + predicate);
  }
  std::cout << token << "\n";
  if (audit) std::cout << "max_degree=" << log.max_degree() << "\n";
  return 0;
}

const std::vector<std::string> kAllPredicates = {
    "incone", "trisector", "distance", "existence",
    "shadow", "insphere",  "order",    "edge-conflict"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact EdgeConflict predicates for the 3D Apollonius diagram"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string predicate;
  std::vector<std::string> ids;
  bool audit = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a predicate on a scene");
  eval->add_option("--scene", scene_path, "Scene file")->required();
  eval->add_option("predicate", predicate, "Predicate name")->required();
  eval->add_option("ids", ids, "Site ids (arity depends on the predicate)");
  eval->add_flag("--audit", audit, "Print max_degree=<n> after the result");

  std::string fuzz_pred = "shadow";
  long count = 1000;
  std::uint64_t seed = 1;
  bool compare_oracle = true;
  auto* fuzz = app.add_subcommand("fuzz", "Compare a predicate against the oracle");
  fuzz->add_option("--predicate", fuzz_pred, "Predicate name or 'all'");
  fuzz->add_option("--count", count, "Instances per predicate");
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_flag("--compare-oracle,!--no-compare-oracle", compare_oracle,
                 "Compare against the numeric oracle (default on)");

  long gen_count = 5;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a random scene on stdout");
  gen->add_option("--count", gen_count, "Number of sites");
  gen->add_option("--seed", gen_seed, "Random seed");

  std::uint64_t audit_seed = 1;
  long audit_count = 200;
  auto* aud = app.add_subcommand("degree-audit", "Report max sign-test degrees per predicate");
  aud->add_option("--count", audit_count, "Instances per predicate");
  aud->add_option("--seed", audit_seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(scene_path, predicate, ids, audit);

    if (fuzz->parsed()) {
      std::vector<std::string> preds =
          fuzz_pred == "all" ? kAllPredicates : std::vector<std::string>{fuzz_pred};
      bool clean = true;
      for (const auto& p : preds) {
        apo::FuzzConfig cfg;
        cfg.predicate = p;
        cfg.count = count;
        cfg.seed = seed;
        apo::FuzzReport rep = apo::run_fuzz(cfg);
        if (!compare_oracle) {
          std::cout << p << ": generated " << rep.generated << ", degenerate "
                    << rep.degenerate << ", max_degree " << rep.max_degree << "\n";
          continue;
        }
        std::cout << apo::format_report(cfg, rep) << "\n";
        clean = clean && rep.clean();
      }
      return clean ? 0 : 1;
    }

    if (gen->parsed()) {
      apo::Rng rng(gen_seed);
      apo::GeneratorConfig gcfg;
      auto sites = apo::random_sites(rng, static_cast<int>(gen_count), gcfg);
      apo::Scene scene;
      for (std::size_t t = 0; t < sites.size(); ++t)
        scene.sites.emplace("s" + std::to_string(t), sites[t]);
      std::cout << apo::serialize(scene);
      return 0;
    }

    if (aud->parsed()) {
      for (const auto& p : kAllPredicates) {
        apo::FuzzConfig cfg;
        cfg.predicate = p;
        cfg.count = audit_count;
        cfg.seed = audit_seed;
        apo::FuzzReport rep = apo::run_fuzz(cfg);
        std::cout << p << ": max_degree " << rep.max_degree;
        if (rep.max_aux_orient_degree > 0)
          std::cout << " (aux orient3d " << rep.max_aux_orient_degree << ")";
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const apo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const apo::DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return 2;
  } catch (const apo::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
