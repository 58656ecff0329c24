/*
 * hopf-forge: construct u(D, lambda, mu), build and verify its deforming
 * cocycles, deform, and report.  Every subcommand reads one datum file and
 * emits one canonical JSON report; exit status encodes the overall verdict
 * (0 pass, 1 bad input, 2 failed verdict, 3 resource cap).
 */

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hopfforge/cocycles.hpp"
#include "hopfforge/datum_io.hpp"
#include "hopfforge/deform.hpp"
#include "hopfforge/dual.hpp"
#include "hopfforge/nichols.hpp"
#include "hopfforge/report.hpp"

using namespace hopfforge;
using nlohmann::json;

namespace {

struct Options {
  std::string datum_path;
  std::string out_path;
  uint32_t max_degree = 5;
  uint64_t dim_cap = 2000;
  uint64_t seed = 424243;
  bool quiet = false;
  bool timings = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("datum", opt.datum_path, "datum file")->required();
  cmd->add_option("--out", opt.out_path, "also write the report to this path");
  cmd->add_option("--max-degree", opt.max_degree, "degree bound for braid-word rechecks");
  cmd->add_option("--dim-cap", opt.dim_cap, "largest basis the run may build");
  cmd->add_option("--seed", opt.seed, "seed for randomized rechecks");
  cmd->add_flag("--quiet", opt.quiet, "suppress stdout copy of the report");
  cmd->add_flag("--timings", opt.timings, "emit real runtime_ms instead of 0");
}

void emit(const Options& opt, const json& j) {
  std::string text = render_json(j);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw input_error("cannot open output path " + opt.out_path);
    out << text;
  }
  if (!opt.quiet) std::cout << text;
}

uint64_t presentation_dimension(const PointedDatum& d) {
  uint64_t dim = d.group.order();
  for (uint32_t i = 0; i < d.theta; ++i) dim *= d.N[i];
  return dim;
}

int run_check(const Options& opt) {
  PointedDatum d = parse_datum_file(opt.datum_path);
  auto violations = validate_datum(d);
  json j;
  j["datum_hash"] = datum_hash(d);
  j["valid"] = violations.empty();
  j["violations"] = violations;
  j["theta"] = d.theta;
  j["conductor"] = d.conductor;
  j["invariant_factors"] = d.group.factors();
  j["root_orders"] = d.N;
  j["dimension"] = presentation_dimension(d);
  emit(opt, j);
  return violations.empty() ? 0 : 2;
}

int run_build(const Options& opt) {
  PointedDatum d = parse_datum_file(opt.datum_path);
  PbwHopfAlgebra A(d, opt.dim_cap);
  json j;
  j["datum_hash"] = datum_hash(d);
  j["dimension"] = A.dim();
  j["conductor"] = A.conductor();
  json basis = json::array();
  for (uint32_t i = 0; i < A.dim(); ++i) basis.push_back(A.label(i));
  j["basis"] = basis;
  json mult = json::array();
  for (uint32_t a = 0; a < A.dim(); ++a) {
    for (uint32_t b = 0; b < A.dim(); ++b) {
      for (const auto& [k, c] : A.mult(a, b))
        mult.push_back({a, b, k, c.str()});
    }
  }
  j["mult"] = mult;
  json comult = json::array();
  for (uint32_t a = 0; a < A.dim(); ++a) {
    for (const auto& [pq, c] : A.comult(a))
      comult.push_back({a, pq.first, pq.second, c.str()});
  }
  j["comult"] = comult;
  json counit = json::array();
  json antipode = json::array();
  for (uint32_t a = 0; a < A.dim(); ++a) {
    if (!A.counit(a).is_zero()) counit.push_back({a, A.counit(a).str()});
    for (const auto& [k, c] : A.antipode(a)) antipode.push_back({a, k, c.str()});
  }
  j["counit"] = counit;
  j["antipode"] = antipode;
  emit(opt, j);
  return 0;
}

int run_verify_cocycle(const Options& opt) {
  PointedDatum d = parse_datum_file(opt.datum_path);
  PbwHopfAlgebra A0(d.zeroed(), opt.dim_cap);
  HopfTables T = tables_from(A0);
  PairFunctional sigma = assemble_sigma(A0, T, d);
  MultiplicativeReport rep = is_multiplicative_cocycle(T, sigma);
  GradedDecomposition graded = graded_parts(T, sigma);
  json j;
  j["datum_hash"] = datum_hash(d);
  j["cocycle"] = cocycle_json(rep);
  j["graded"] = graded_json(graded);
  j["support"] = sigma.size();
  emit(opt, j);
  bool pass = rep.ok() && graded.unital_degree_zero && graded.infinitesimal_hochschild;
  return pass ? 0 : 2;
}

int run_deform(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  PointedDatum d = parse_datum_file(opt.datum_path);
  PbwHopfAlgebra A0(d.zeroed(), opt.dim_cap);
  HopfTables T = tables_from(A0);
  PairFunctional sigma = assemble_sigma(A0, T, d);
  MultiplicativeReport rep = is_multiplicative_cocycle(T, sigma);
  if (!rep.ok() || !rep.inverse) {
    json j;
    j["datum_hash"] = datum_hash(d);
    j["cocycle"] = cocycle_json(rep);
    j["runtime_ms"] = 0;
    emit(opt, j);
    return 2;
  }
  DeformationResult res = deform_by_cocycle(T, sigma, *rep.inverse);
  LiftingMatch match = match_lifting(res.tables, A0, d);
  GradedDecomposition graded = graded_parts(T, sigma);
  auto t1 = std::chrono::steady_clock::now();
  uint64_t ms = opt.timings
      ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
      : 0;
  json j = deformation_report(d, rep, res, match, graded, ms);
  emit(opt, j);
  bool pass = rep.ok() && res.axioms.all() && match.all() && graded.unital_degree_zero &&
              graded.infinitesimal_hochschild;
  return pass ? 0 : 2;
}

int run_nichols(const Options& opt) {
  PointedDatum d = parse_datum_file(opt.datum_path);
  DiagonalBraiding B = braiding_of(d);
  HilbertReport H = nichols_hilbert_series(d, opt.dim_cap);
  json mats;
  bool mats_ok = true;
  json degrees = json::array();
  for (uint32_t n = 2; n <= opt.max_degree; ++n) {
    uint64_t dim = 1;
    bool fits = true;
    for (uint32_t p = 0; p < n; ++p) {
      dim *= B.theta;
      if (dim > opt.dim_cap) { fits = false; break; }
    }
    if (!fits) break;
    std::string wit;
    bool ok = matsumoto_recheck(B, n, 5, opt.seed + n, &wit);
    degrees.push_back(n);
    if (!ok) {
      mats_ok = false;
      mats["witness"] = wit;
      break;
    }
  }
  mats["degrees"] = degrees;
  mats["ok"] = mats_ok;
  json j;
  j["datum_hash"] = datum_hash(d);
  j["hilbert"] = hilbert_json(H);
  j["matsumoto"] = mats;
  emit(opt, j);
  return (H.match && mats_ok) ? 0 : 2;
}

int run_dual(const Options& opt) {
  PointedDatum d = parse_datum_file(opt.datum_path);
  if (d.theta != 1) throw input_error("dual subcommand handles rank-1 data only");
  PbwHopfAlgebra A0(d.zeroed(), opt.dim_cap);
  HopfTables T = tables_from(A0);
  DualResult dres = dual_hopf(T);
  PairFunctional F = assemble_sigma(A0, T, d);
  TwistReport tw = twist_precondition(T, F);
  json j;
  j["datum_hash"] = datum_hash(d);
  j["dual_axioms"] = axioms_json(dres.axioms);
  j["double_dual"] = dres.double_dual_matches;
  json twj;
  twj["normalized"] = tw.normalized;
  twj["conditions"] = tw.conditions;
  twj["invertible"] = tw.invertible;
  if (!tw.witness.empty()) twj["witness"] = tw.witness;
  j["twist"] = twj;
  bool pass = dres.axioms.all() && dres.double_dual_matches && tw.ok();
  if (tw.ok()) {
    TwistedDualChecks tdc = verify_twisted_dual(T, F, *tw.inverse);
    json tj;
    tj["counital"] = tdc.counital;
    tj["coassociative"] = tdc.coassociative;
    tj["algebra_map"] = tdc.algebra_map;
    if (!tdc.witness.empty()) tj["witness"] = tdc.witness;
    j["twisted_dual"] = tj;
    pass = pass && tdc.ok();
  }
  emit(opt, j);
  return pass ? 0 : 2;
}

std::string rescaling_label(const Cyc& mu_prime, const Cyc& mu, const Cyc& phi_h) {
  if (mu_prime == (Cyc(1) - phi_h) * mu) return "(1-phi(h))*mu";
  if (mu_prime == phi_h * mu) return "phi(h)*mu";
  if (mu_prime == (phi_h - Cyc(1)) * mu) return "(phi(h)-1)*mu";
  return "none";
}

int run_singer(const Options& opt) {
  PointedDatum d = parse_datum_file(opt.datum_path);
  Character phi = pick_singer_character(d);
  SingerData sd = singer_cocycle(d, phi, opt.dim_cap);
  json j;
  j["datum_hash"] = datum_hash(d);
  json pj = json::array();
  for (auto c : phi.c) pj.push_back(c);
  j["phi"] = pj;
  json sj;
  sj["ok"] = sd.ok;
  if (!sd.witness.empty()) sj["witness"] = sd.witness;
  sj["multiplicative_on_C"] = cocycle_json(sd.sigma_prime_check);
  sj["xi_inverse_verified"] = sd.xi_inverse_verified;
  sj["representative_independent"] = sd.representative_independent;
  sj["chi_inverse_verified"] = sd.chi_inverse_verified;
  sj["a_values_in_group_part"] = sd.a_values_in_group_part;
  j["singer"] = sj;
  bool pass = sd.ok;
  if (sd.ok) {
    HopfTables T0 = tables_from(*sd.A0);
    MultiplicativeReport rep = is_multiplicative_cocycle(T0, sd.sigma_lift);
    json lj;
    lj["cocycle"] = cocycle_json(rep);
    pass = pass && rep.ok();
    if (rep.ok() && rep.inverse) {
      DeformationResult res = deform_by_cocycle(T0, sd.sigma_lift, *rep.inverse);
      lj["hopf_axioms"] = axioms_json(res.axioms);
      pass = pass && res.axioms.all();
      json mp = json::array();
      for (uint32_t i = 0; i < d.theta; ++i) {
        json e;
        e["vertex"] = i;
        auto ms = radical_scalar(res.tables, *sd.A0, d, i);
        if (ms) {
          GroupElement h = d.group.mul_int(d.g[i], d.N[i]);
          Cyc phi_h = character_pairing(d.group, phi, h, d.conductor);
          e["value"] = ms->str();
          e["rescaling"] = rescaling_label(*ms, d.mu[i], phi_h);
        } else {
          e["value"] = "not of radical shape";
        }
        mp.push_back(e);
      }
      lj["mu_prime"] = mp;
    }
    j["lift"] = lj;
  }
  emit(opt, j);
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructor and verifier for pointed Hopf algebra deformations"};
  app.require_subcommand(1);

  Options opt;
  int (*runner)(const Options&) = nullptr;

  auto* check = app.add_subcommand("check", "validate a datum file");
  add_common(check, opt);
  check->callback([&] { runner = run_check; });

  auto* build = app.add_subcommand("build", "dump structure constants of u(D,lambda,mu)");
  add_common(build, opt);
  build->callback([&] { runner = run_build; });

  auto* vc = app.add_subcommand("verify-cocycle", "assemble sigma and verify it");
  add_common(vc, opt);
  vc->callback([&] { runner = run_verify_cocycle; });

  auto* deform = app.add_subcommand("deform", "deform u(D,0,0) by sigma and match the lifting");
  add_common(deform, opt);
  deform->callback([&] { runner = run_deform; });

  auto* nd = app.add_subcommand("nichols-dims", "Nichols algebra graded dimensions");
  add_common(nd, opt);
  nd->callback([&] { runner = run_nichols; });

  auto* dual = app.add_subcommand("dual", "dual Hopf algebra and twist checks, rank 1 only");
  add_common(dual, opt);
  dual->callback([&] { runner = run_dual; });

  auto* singer = app.add_subcommand("singer", "Singer cocycle of the cleft extension");
  add_common(singer, opt);
  singer->callback([&] { runner = run_singer; });

  CLI11_PARSE(app, argc, argv);

  try {
    return runner(opt);
  } catch (const cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
