// tonelab: spectral-geometry toolkit CLI.
//
// Subcommands compute first Dirichlet eigenvalues of geodesic balls in model
// and warped geometries and verify the associated eigenvalue bounds; every
// run emits a deterministic JSON report (plus CSV where a sweep or profile is
// produced) into --out / $TONELAB_OUT_DIR / ./reports.
//
// Exit codes: 0 all checks pass, 1 a verdict failed, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "tonelab/acceptance.hpp"
#include "tonelab/comparison.hpp"
#include "tonelab/discrete_domain.hpp"
#include "tonelab/quasilinear.hpp"
#include "tonelab/radial_eigen.hpp"
#include "tonelab/reports.hpp"
#include "tonelab/tone_bounds.hpp"
#include "tonelab/warp.hpp"

namespace {

using tonelab::reports::json;
using tonelab::reports::num;

struct Config {
  double c = 0.0;
  int dim = 2;
  double radius = 1.0;
  int grid = 4096;
  double tol = 1e-8;
  std::uint64_t seed = 7;
  int trials = 50;
  int m = 2;
  double roughness = 0.5;
  double supa2 = 0.0;
  double fconst = 0.0;
  double psi = 0.0;
  std::string out;
  std::string format = "json";
};

json echo_config(const Config& cfg, const std::string& command) {
  json j;
  j["command"] = command;
  j["c"] = num(cfg.c);
  j["dim"] = cfg.dim;
  j["radius"] = num(cfg.radius);
  j["grid"] = cfg.grid;
  j["tol"] = num(cfg.tol);
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  return j;
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--c", cfg.c, "sectional curvature of the model");
  cmd->add_option("--dim", cfg.dim, "dimension n");
  cmd->add_option("--radius", cfg.radius, "ball radius r");
  cmd->add_option("--grid", cfg.grid, "grid size N");
  cmd->add_option("--tol", cfg.tol, "solver tolerance");
  cmd->add_option("--seed", cfg.seed, "master RNG seed");
  cmd->add_option("--trials", cfg.trials, "sweep size");
  cmd->add_option("--out", cfg.out, "output directory");
  cmd->add_option("--format", cfg.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

struct Emitter {
  std::string dir;
  std::string index;  // accumulated CSV rows

  void emit(const std::string& name, const json& j, bool pass) {
    tonelab::reports::write_file(dir, name + ".json", j.dump(2) + "\n");
    index += name + "," + (pass ? "PASS" : "FAIL") + "\n";
  }
  void finish() {
    tonelab::reports::write_file(dir, "index.csv", "report,verdict\n" + index);
  }
};

std::string csv_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

int run_model(const Config& cfg, Emitter& em, bool warped) {
  tonelab::radial::RadialEigenResult res;
  if (warped) {
    const auto warp = tonelab::random_warp(cfg.c, cfg.radius, cfg.seed,
                                           cfg.roughness, cfg.grid);
    res = tonelab::radial::warped_ball_lambda1(warp, cfg.dim, cfg.tol);
  } else {
    tonelab::spaceform::ModelBall ball(cfg.c, cfg.dim, cfg.radius);
    res = tonelab::radial::model_ball_lambda1(ball, cfg.tol, cfg.grid);
  }
  const std::string name = warped ? "warped" : "model";
  json j = echo_config(cfg, name);
  j["lambda1"] = num(res.lambda1);
  j["residual"] = num(res.residual);
  j["iterations"] = res.iterations;
  j["bracket"] = {num(res.bracket.first), num(res.bracket.second)};
  em.emit(name, j, true);
  if (cfg.format == "csv") {
    std::string csv = "t,v,dv\n";
    for (size_t i = 0; i < res.t.size(); ++i)
      csv += csv_num(res.t[i]) + "," + csv_num(res.v[i]) + "," +
             csv_num(res.dv[i]) + "\n";
    tonelab::reports::write_file(em.dir, name + "_profile.csv", csv);
  }
  std::cout << "lambda1 = " << res.lambda1 << "\n";
  return 0;
}

tonelab::discrete::DiscreteDomain make_radial(const Config& cfg) {
  const int N = std::min(cfg.grid, 4096);
  return tonelab::discrete::build_radial_domain(
      tonelab::WarpProfile::model(cfg.c, cfg.radius, N), cfg.dim, N);
}

int run_barta(const Config& cfg, Emitter& em) {
  const auto dom = make_radial(cfg);
  const double lam = tonelab::discrete::smallest_eigenpair(dom, 1e-12).first;
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dom.num_nodes());
  for (int i = 0; i < dom.num_nodes(); ++i)
    if (!dom.is_boundary[i]) {
      const double s = dom.node_t[i] / cfg.radius;
      f[i] = 1.0 - s * s;
    }
  const auto rep = tonelab::tone_bounds::barta_bounds(dom, f, lam);
  json j = tonelab::reports::bound_report_json(rep, echo_config(cfg, "barta"));
  j["test_function"] = "1 - (t/r)^2";
  em.emit("barta", j, rep.pass);
  std::cout << "barta: " << rep.lower << " <= " << lam << " <= " << rep.upper
            << " -> " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int run_vfield(const Config& cfg, Emitter& em) {
  const auto dom = make_radial(cfg);
  const double lam = tonelab::discrete::smallest_eigenpair(dom, 1e-12).first;
  const auto X0 = tonelab::tone_bounds::optimal_vfield(dom);
  const auto rep = tonelab::tone_bounds::vfield_lower_bound(dom, X0, lam);
  json j = tonelab::reports::bound_report_json(rep, echo_config(cfg, "vfield"));
  j["field"] = "-grad log v (ground eigenvector)";
  j["certificate_gap"] = num(std::abs(rep.lower - lam));
  em.emit("vfield", j, rep.pass);
  std::cout << "vfield certificate: " << rep.lower << " vs lambda1 " << lam
            << " -> " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int run_mckean(const Config& cfg, Emitter& em) {
  const auto rep = tonelab::tone_bounds::mckean_report(cfg.dim, cfg.radius);
  json j = tonelab::reports::bound_report_json(rep, echo_config(cfg, "mckean"));
  em.emit("mckean", j, rep.pass);
  std::cout << "lambda1 = " << rep.lambda1 << " > (n-1)^2/4 = " << rep.lower
            << " -> " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int run_corpus(const Config& cfg, Emitter& em, bool bishop) {
  const std::string name = bishop ? "bishop" : "cheng";
  std::string csv = "seed,c,margin,verdict\n";
  int passed = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t s = tonelab::split_seed(cfg.seed, t);
    const auto warp = tonelab::random_warp(cfg.c, cfg.radius, s, cfg.roughness,
                                           std::min(cfg.grid, 2048));
    double margin;
    bool ok;
    if (bishop) {
      const auto rep = tonelab::comparison::bishop_check(warp, cfg.c, cfg.dim);
      margin = rep.min_ratio_derivative;
      ok = rep.status == "ok" && rep.pass;
    } else {
      const auto rep = tonelab::comparison::cheng_compare(warp, cfg.c, cfg.dim);
      margin = rep.margin;
      ok = rep.status == "ok" && rep.pass;
    }
    if (ok) ++passed;
    csv += std::to_string(s) + "," + csv_num(cfg.c) + "," + csv_num(margin) +
           "," + (ok ? "PASS" : "FAIL") + "\n";
  }
  tonelab::reports::write_file(em.dir, name + "_corpus.csv", csv);
  const bool all = passed == cfg.trials;
  json j = echo_config(cfg, name);
  j["check"] = bishop ? "volume-density monotonicity" : "eigenvalue comparison";
  j["passed"] = passed;
  j["trials"] = cfg.trials;
  j["verdict"] = all ? "PASS" : "FAIL";
  em.emit(name, j, all);
  std::cout << name << ": " << passed << "/" << cfg.trials << " -> "
            << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 1;
}

int run_mu(const Config& cfg, Emitter& em) {
  const int c = static_cast<int>(cfg.c);
  const auto rep = tonelab::comparison::wronskian_negativity(
      c, cfg.m, cfg.radius, std::min(cfg.grid, 4096));
  bool pass = rep.pass;
  json j = echo_config(cfg, "mu");
  j["m"] = cfg.m;
  j["check"] = "wronskian negativity";
  j["lambda1"] = num(rep.lambda1);
  j["max_wronskian"] = num(rep.max_w);
  j["max_equivalent_form"] = num(rep.max_equiv);
  if (c != 0) {
    const auto br = tonelab::comparison::bracket_positivity(
        c, cfg.m, rep.lambda1, cfg.radius, std::min(cfg.grid, 4096));
    j["bracket_min"] = num(br.min_value);
    pass = pass && br.pass;
  }
  j["verdict"] = pass ? "PASS" : "FAIL";
  em.emit("mu", j, pass);
  std::cout << (pass ? "PASS" : "FAIL") << " min margin "
            << -rep.max_w << "\n";
  return pass ? 0 : 1;
}

int run_catenoid(const Config& cfg, Emitter& em) {
  const auto rep = tonelab::comparison::submanifold_bound_check(
      cfg.radius, std::min(cfg.grid, 2048));
  json j = echo_config(cfg, "catenoid");
  j["check"] = "minimal-submanifold eigenvalue bound";
  j["u_half_width"] = num(rep.u_r);
  j["lambda1_1d"] = num(rep.lambda_1d);
  j["lambda1_2d"] = num(rep.lambda_2d);
  j["flat_disk_bound"] = num(rep.flat_disk_bound);
  j["margin"] = num(rep.margin);
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  em.emit("catenoid", j, rep.pass);
  std::cout << "lambda1(Omega) = " << rep.lambda_1d
            << " >= " << rep.flat_disk_bound << " -> "
            << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int run_stability(const Config& cfg, Emitter& em) {
  const double a2 = cfg.supa2;
  auto profile = [a2](double) { return a2; };
  const auto res = tonelab::comparison::stability_check(
      cfg.dim, cfg.radius, a2, profile, std::min(cfg.grid, 1024));
  json j = echo_config(cfg, "stability");
  j["sup_a2"] = num(a2);
  j["threshold"] = num(res.threshold);
  j["stability_operator_eig"] = num(res.stability_eig);
  j["verdict"] = res.verdict;
  em.emit("stability", j, true);
  std::cout << res.verdict << " (threshold " << res.threshold << ")\n";
  return 0;
}

int run_elliptic(const Config& cfg, Emitter& em, const std::string& mode) {
  const auto dom = make_radial(cfg);
  const double lam = tonelab::discrete::smallest_eigenpair(dom, 1e-12).first;
  const int nn = dom.num_nodes();
  const Eigen::VectorXd F = Eigen::VectorXd::Constant(nn, cfg.fconst);
  json j = echo_config(cfg, "elliptic-" + mode);
  j["F"] = num(cfg.fconst);
  j["lambda1"] = num(lam);

  if (mode == "gate") {
    const auto g = tonelab::ql::solvability_gate(dom, F, lam);
    j["gate"] = tonelab::ql::gate_name(g);
    em.emit("elliptic_gate", j, true);
    std::cout << tonelab::ql::gate_name(g) << "\n";
    return 0;
  }
  if (mode == "blowup") {
    const auto sol = tonelab::ql::blowup_solution(dom);
    j["defect_vs_lambda1"] = num(sol.residual);
    j["status"] = sol.status;
    em.emit("elliptic_blowup", j, sol.status == "ok");
    std::cout << "blow-up defect " << sol.residual << "\n";
    return sol.status == "ok" ? 0 : 1;
  }
  // solve
  if (tonelab::ql::solvability_gate(dom, F, lam) != tonelab::ql::Gate::Solvable) {
    j["status"] = "gate_not_solvable";
    em.emit("elliptic_solve", j, false);
    std::cout << "gate not Solvable; no solve attempted\n";
    return 1;
  }
  const Eigen::VectorXd psi = Eigen::VectorXd::Constant(nn, cfg.psi);
  const auto sol = tonelab::ql::solve_dirichlet(dom, F, psi, lam);
  j["status"] = sol.status;
  j["residual"] = num(sol.residual);
  const bool ok = sol.status == "ok";
  em.emit("elliptic_solve", j, ok);
  std::cout << "status " << sol.status << ", residual " << sol.residual << "\n";
  return ok ? 0 : 1;
}

int run_accept(const Config& cfg, Emitter& em) {
  const auto suite = tonelab::accept::run_all(cfg.seed);
  json j = echo_config(cfg, "accept");
  json list = json::array();
  std::string csv = "id,name,verdict,seconds\n";
  for (const auto& c : suite.criteria) {
    std::cout << tonelab::accept::format_line(c) << "\n";
    json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    e["seconds"] = num(c.seconds);
    list.push_back(e);
    csv += std::to_string(c.id) + "," + c.name + "," +
           (c.pass ? "PASS" : "FAIL") + "," + csv_num(c.seconds) + "\n";
  }
  j["criteria"] = list;
  j["all_pass"] = suite.all_pass;
  em.emit("accept", j, suite.all_pass);
  tonelab::reports::write_file(em.dir, "accept.csv", csv);
  std::cout << (suite.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return suite.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tonelab: fundamental-tone bounds for model and warped geometries"};
  app.require_subcommand(1);
  Config cfg;

  auto* model = app.add_subcommand("model", "lambda1 of a model geodesic ball");
  auto* warped = app.add_subcommand("warped", "lambda1 of a seeded random warp");
  warped->add_option("--roughness", cfg.roughness, "warp perturbation size");
  auto* barta = app.add_subcommand("barta", "two-sided test-function bound");
  auto* vfield = app.add_subcommand("vfield", "vector-field certificate");
  auto* mckean = app.add_subcommand("mckean", "hyperbolic asymptote check");
  auto* cheng = app.add_subcommand("cheng", "seeded comparison corpus");
  cheng->add_option("--roughness", cfg.roughness, "warp perturbation size");
  auto* bishop = app.add_subcommand("bishop", "volume-density monotonicity corpus");
  bishop->add_option("--roughness", cfg.roughness, "warp perturbation size");
  auto* mu = app.add_subcommand("mu", "Wronskian negativity + bracket positivity");
  mu->add_option("--m", cfg.m, "submanifold dimension m");
  auto* catenoid = app.add_subcommand("catenoid", "catenoid eigenvalue bound");
  auto* stability = app.add_subcommand("stability", "hypersurface stability");
  stability->add_option("--supa2", cfg.supa2, "sup of |A|^2");
  auto* elliptic = app.add_subcommand("elliptic", "quasilinear Dirichlet problem");
  elliptic->require_subcommand(1);
  auto* el_solve = elliptic->add_subcommand("solve", "solve with constant F, psi");
  auto* el_gate = elliptic->add_subcommand("gate", "solvability gate");
  auto* el_blow = elliptic->add_subcommand("blowup", "boundary blow-up solution");
  for (auto* sub : {el_solve, el_gate, el_blow}) {
    sub->add_option("--fconst", cfg.fconst, "constant F");
    sub->add_option("--psi", cfg.psi, "constant boundary data");
    add_common(sub, cfg);
  }
  auto* accept = app.add_subcommand("accept", "full acceptance suite");
  for (auto* sub : {model, warped, barta, vfield, mckean, cheng, bishop, mu,
                    catenoid, stability, accept})
    add_common(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/help
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    Emitter em{tonelab::reports::resolve_out_dir(cfg.out), ""};
    int rc = 2;
    if (*model) rc = run_model(cfg, em, false);
    else if (*warped) rc = run_model(cfg, em, true);
    else if (*barta) rc = run_barta(cfg, em);
    else if (*vfield) rc = run_vfield(cfg, em);
    else if (*mckean) rc = run_mckean(cfg, em);
    else if (*cheng) rc = run_corpus(cfg, em, false);
    else if (*bishop) rc = run_corpus(cfg, em, true);
    else if (*mu) rc = run_mu(cfg, em);
    else if (*catenoid) rc = run_catenoid(cfg, em);
    else if (*stability) rc = run_stability(cfg, em);
    else if (*elliptic) {
      const std::string mode = (*el_solve) ? "solve" : (*el_gate) ? "gate" : "blowup";
      rc = run_elliptic(cfg, em, mode);
    } else if (*accept) {
      rc = run_accept(cfg, em);
    }
    em.finish();
    return rc;
  } catch (const tonelab::reports::WriteError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
