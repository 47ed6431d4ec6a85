#include "tonelab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tonelab/comparison.hpp"
#include "tonelab/discrete_domain.hpp"
#include "tonelab/quasilinear.hpp"
#include "tonelab/radial_eigen.hpp"
#include "tonelab/tone_bounds.hpp"
#include "tonelab/warp.hpp"

namespace tonelab::accept {

namespace {

using Clock = std::chrono::steady_clock;

// Independent oracle for the flat-disk eigenvalue: J0 by its power series,
// first zero by bisection. Kept separate from the solvers on purpose.
double bessel_j0(double x) {
  const double q = -x * x / 4.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= q / (k * k);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

double j0_first_zero() {
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (bessel_j0(mid) < 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string fmt(double x, int prec = 8) {
  std::ostringstream os;
  os.precision(prec);
  os << x;
  return os.str();
}

CriterionResult c01_hemisphere(std::uint64_t) {
  CriterionResult c{1, "hemisphere-eigenvalue", false, "", 0.0};
  double max_err = 0.0, max_sec = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const auto t0 = Clock::now();
    spaceform::ModelBall ball(1.0, n, M_PI / 2.0);
    const double lam = radial::model_ball_lambda1(ball, 1e-8).lambda1;
    const double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    max_err = std::max(max_err, std::abs(lam - n));
    max_sec = std::max(max_sec, sec);
  }
  c.pass = max_err <= 1e-6 && max_sec < 1.0;
  c.detail = "max |lambda1 - n| = " + fmt(max_err, 3) +
             " (tol 1e-6), slowest solve " + fmt(max_sec, 3) + "s (< 1s)";
  return c;
}

CriterionResult c02_flat_disk(std::uint64_t) {
  CriterionResult c{2, "flat-disk-bessel", false, "", 0.0};
  spaceform::ModelBall ball(0.0, 2, 1.0);
  const double lam = radial::model_ball_lambda1(ball, 1e-8).lambda1;
  const double z = j0_first_zero();
  const double err = std::abs(lam - z * z);
  c.pass = err <= 1e-5;
  c.detail = "lambda1 = " + fmt(lam) + ", oracle j01^2 = " + fmt(z * z) +
             ", |diff| = " + fmt(err, 3) + " (tol 1e-5)";
  return c;
}

CriterionResult c03_scaling(std::uint64_t) {
  CriterionResult c{3, "euclidean-scaling", false, "", 0.0};
  spaceform::ModelBall unit(0.0, 2, 1.0);
  const double base = radial::model_ball_lambda1(unit, 1e-10).lambda1;
  double worst = 0.0;
  for (double r : {0.5, 2.0, 4.0}) {
    spaceform::ModelBall ball(0.0, 2, r);
    const double lam = radial::model_ball_lambda1(ball, 1e-10 / (r * r)).lambda1;
    worst = std::max(worst, std::abs(lam - base / (r * r)));
  }
  c.pass = worst < 1e-8 * base;
  c.detail = "max |lambda1(r) - lambda1(1)/r^2| = " + fmt(worst, 3) +
             " (tol " + fmt(1e-8 * base, 3) + ")";
  return c;
}

CriterionResult c04_mckean(std::uint64_t) {
  CriterionResult c{4, "mckean-limit", false, "", 0.0};
  const double l2 = tone_bounds::mckean_report(2, 50.0).lambda1;
  const double l3 = tone_bounds::mckean_report(3, 50.0).lambda1;
  const bool ok2 = l2 > 0.25 && l2 < 0.251;
  const bool ok3 = l3 > 1.0 && l3 < 1.004;
  c.pass = ok2 && ok3;
  c.detail = "lambda1(n=2,r=50) = " + fmt(l2) + " (window (0.25, 0.251): " +
             (ok2 ? "in" : "OUT") + "), lambda1(n=3,r=50) = " + fmt(l3) +
             " (window (1.0, 1.004): " + (ok3 ? "in" : "OUT") + ")";
  return c;
}

CriterionResult c05_barta(std::uint64_t seed) {
  CriterionResult c{5, "barta-sandwich", false, "", 0.0};
  std::vector<discrete::DiscreteDomain> domains;
  domains.push_back(
      discrete::build_radial_domain(WarpProfile::model(0.0, 1.0, 256), 2, 256));
  domains.push_back(discrete::build_radial_domain(
      WarpProfile::model(1.0, M_PI / 2.0, 256), 2, 256));
  domains.push_back(
      discrete::build_radial_domain(WarpProfile::model(-1.0, 2.0, 256), 3, 256));
  domains.push_back(
      discrete::build_polar_domain(WarpProfile::model(0.0, 1.0, 48), 48, 32));
  auto one = [](double) { return 1.0; };
  domains.push_back(discrete::build_interval_domain(0.0, 1.0, 256, one, one));

  int passed = 0, total = 0;
  for (size_t d = 0; d < domains.size(); ++d) {
    const double lam = discrete::smallest_eigenpair(domains[d], 1e-12).first;
    for (int trial = 0; trial < 100; ++trial) {
      std::mt19937_64 rng(split_seed(seed, 500 + 100 * d + trial));
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      Eigen::VectorXd f = Eigen::VectorXd::Zero(domains[d].num_nodes());
      for (int i = 0; i < domains[d].num_nodes(); ++i)
        if (!domains[d].is_boundary[i]) f[i] = 0.1 + u01(rng);
      ++total;
      if (tone_bounds::barta_bounds(domains[d], f, lam).pass) ++passed;
    }
  }
  c.pass = passed == total && total == 500;
  c.detail = "lower <= lambda1 <= upper in " + std::to_string(passed) + "/" +
             std::to_string(total) + " random-field trials on 5 domains";
  return c;
}

double certificate_gap(int N) {
  const auto dom =
      discrete::build_radial_domain(WarpProfile::model(0.0, 1.0, N), 2, N);
  const double lam = discrete::smallest_eigenpair(dom, 1e-12).first;
  const auto X0 = tone_bounds::optimal_vfield(dom);
  const auto rep = tone_bounds::vfield_lower_bound(dom, X0, lam);
  return std::abs(rep.lower - lam);
}

CriterionResult c06_certificate(std::uint64_t) {
  CriterionResult c{6, "vfield-certificate", false, "", 0.0};
  const double g256 = certificate_gap(256);
  const double g512 = certificate_gap(512);
  const double ratio = g256 / g512;
  c.pass = g256 <= 0.3 && ratio >= 1.8;
  c.detail = "|inf(div X0 - |X0|^2) - lambda1| = " + fmt(g256, 3) +
             " at N=256 (tol 0.3), improvement factor " + fmt(ratio, 3) +
             " at N=512 (>= 1.8)";
  return c;
}

CriterionResult c07_cheng(std::uint64_t seed) {
  CriterionResult c{7, "cheng-comparison", false, "", 0.0};
  int passed = 0, total = 0;
  double worst_eq = 0.0;
  const double cs[] = {-1.0, 0.0, 1.0};
  for (int ci = 0; ci < 3; ++ci) {
    const double cv = cs[ci];
    const double r = (cv > 0.0) ? 1.5 : 2.0;
    for (int t = 0; t < 50; ++t) {
      const auto warp =
          random_warp(cv, r, split_seed(seed, 700 + 50 * ci + t), 0.5, 2048);
      const auto rep = comparison::cheng_compare(warp, cv, 2, 1e-8);
      ++total;
      if (rep.status == "ok" && rep.pass) ++passed;
    }
    const auto flat = random_warp(cv, r, 1, 0.0, 2048);
    worst_eq = std::max(worst_eq,
                        std::abs(comparison::cheng_compare(flat, cv, 2).margin));
  }
  c.pass = passed == total && total == 150 && worst_eq <= 1e-6;
  c.detail = "lambda1(warp) >= lambda1(model) - 1e-8 in " +
             std::to_string(passed) + "/" + std::to_string(total) +
             " seeded warps; max |equality-case margin| = " + fmt(worst_eq, 3);
  return c;
}

CriterionResult c08_bishop(std::uint64_t seed) {
  CriterionResult c{8, "bishop-monotonicity", false, "", 0.0};
  int passed = 0, total = 0;
  const double cs[] = {-1.0, 0.0, 1.0};
  for (int ci = 0; ci < 3; ++ci) {
    const double cv = cs[ci];
    const double r = (cv > 0.0) ? 1.5 : 2.0;
    for (int t = 0; t < 50; ++t) {
      const auto warp =
          random_warp(cv, r, split_seed(seed, 700 + 50 * ci + t), 0.5, 2048);
      const auto rep = comparison::bishop_check(warp, cv, 2, 1e-8);
      ++total;
      if (rep.status == "ok" && rep.pass) ++passed;
    }
  }
  c.pass = passed == total && total == 150;
  c.detail = "(f/S_c)' >= -1e-8 node-wise in " + std::to_string(passed) + "/" +
             std::to_string(total) + " seeded warps";
  return c;
}

CriterionResult c09_wronskian(std::uint64_t) {
  CriterionResult c{9, "wronskian-negativity", false, "", 0.0};
  int w_passed = 0, w_total = 0, b_passed = 0, b_total = 0;
  for (int cv : {-1, 0, 1})
    for (int m : {2, 3, 4}) {
      std::vector<double> radii = {0.3, 0.7, 1.2};
      if (cv <= 0) {
        radii.push_back(2.0);
        radii.push_back(5.0);
      }
      for (double r : radii) {
        const auto rep = comparison::wronskian_negativity(cv, m, r);
        ++w_total;
        if (rep.pass) ++w_passed;
        if (cv != 0) {
          ++b_total;
          if (comparison::bracket_positivity(cv, m, rep.lambda1, r).pass)
            ++b_passed;
        }
      }
    }
  c.pass = w_passed == w_total && b_passed == b_total;
  c.detail = "W < 0 at every interior node in " + std::to_string(w_passed) +
             "/" + std::to_string(w_total) + " lattice cases; bracket > 0 in " +
             std::to_string(b_passed) + "/" + std::to_string(b_total);
  return c;
}

CriterionResult c10_catenoid(std::uint64_t) {
  CriterionResult c{10, "catenoid-bound", false, "", 0.0};
  bool all = true;
  std::string d;
  for (double r : {1.2, 1.5, 2.0}) {
    const auto rep = comparison::submanifold_bound_check(r);
    all = all && rep.pass && rep.margin > 0.0;
    if (!d.empty()) d += "; ";
    d += "r=" + fmt(r, 3) + ": margin " + fmt(rep.margin, 4) +
         ", 1D/2D gap " + fmt(rep.agreement, 3);
  }
  c.pass = all;
  c.detail = d + " (margin > 0, gap <= 1e-3)";
  return c;
}

CriterionResult c11_stability(std::uint64_t) {
  CriterionResult c{11, "stability-threshold", false, "", 0.0};
  auto flat2 = [](double) { return 2.0; };
  const auto a = comparison::stability_check(2, 1.5, 2.0, flat2, 1024);
  const auto b = comparison::stability_check(2, 1.75, 2.0);
  const bool ok_a = a.verdict == "stable" && a.has_eig && a.stability_eig > 0.0;
  const bool ok_b = b.verdict == "inconclusive";
  c.pass = ok_a && ok_b;
  c.detail = "r=1.5: " + a.verdict + ", stability-operator eig " +
             fmt(a.stability_eig, 4) + " (> 0); r=1.75: " + b.verdict +
             " (threshold " + fmt(b.threshold, 4) + " < 2)";
  return c;
}

CriterionResult c12_quasilinear(std::uint64_t) {
  CriterionResult c{12, "quasilinear-gate-solve", false, "", 0.0};
  const int N = 256;
  const auto dom =
      discrete::build_radial_domain(WarpProfile::model(0.0, 1.0, N), 2, N);
  const double lam = discrete::smallest_eigenpair(dom, 1e-12).first;
  const int nn = dom.num_nodes();
  const Eigen::VectorXd psi = Eigen::VectorXd::Zero(nn);

  bool all = true;
  std::string d;
  for (double s : {0.0, 0.5, 0.9}) {
    const Eigen::VectorXd F = Eigen::VectorXd::Constant(nn, s * lam);
    const bool gate_ok =
        ql::solvability_gate(dom, F, lam) == ql::Gate::Solvable;
    const auto sol = ql::solve_dirichlet(dom, F, psi, lam);
    const bool ok = gate_ok && sol.status == "ok" && sol.residual < 1e-4;
    all = all && ok;
    if (!d.empty()) d += "; ";
    d += "F=" + fmt(s, 2) + "*lambda1: residual " + fmt(sol.residual, 3) +
         (ok ? "" : " FAIL");
  }
  const Eigen::VectorXd Fbig = Eigen::VectorXd::Constant(nn, 1.1 * lam);
  const bool cert =
      ql::solvability_gate(dom, Fbig, lam) == ql::Gate::NoSolutionCertificate;
  all = all && cert;
  d += std::string("; F=1.1*lambda1 gate: ") +
       (cert ? "NoSolutionCertificate" : "FAIL");

  const auto blow = ql::blowup_solution(dom);
  const bool blow_ok = blow.residual <= 1e-2;
  all = all && blow_ok;
  d += "; blow-up defect " + fmt(blow.residual, 3) + " (tol 1e-2" +
       (blow_ok ? ")" : ", FAIL)");

  c.pass = all;
  c.detail = d;
  return c;
}

CriterionResult timed(CriterionResult (*fn)(std::uint64_t), std::uint64_t seed) {
  const auto t0 = Clock::now();
  CriterionResult c = fn(seed);
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

SuiteResult run_partial(std::uint64_t seed) {
  static CriterionResult (*const table[12])(std::uint64_t) = {
      c01_hemisphere, c02_flat_disk, c03_scaling,  c04_mckean,
      c05_barta,      c06_certificate, c07_cheng,  c08_bishop,
      c09_wronskian,  c10_catenoid,  c11_stability, c12_quasilinear};
  SuiteResult suite;
  suite.all_pass = true;
  for (auto* fn : table) {
    suite.criteria.push_back(timed(fn, seed));
    suite.total_seconds += suite.criteria.back().seconds;
    suite.all_pass = suite.all_pass && suite.criteria.back().pass;
  }
  return suite;
}

CriterionResult aggregate(const SuiteResult& partial) {
  CriterionResult c{13, "suite-aggregate", false, "", partial.total_seconds};
  c.pass = partial.all_pass && partial.total_seconds < 300.0;
  int failed = 0;
  for (const auto& cr : partial.criteria)
    if (!cr.pass) ++failed;
  c.detail = "criteria 1-12 in " + fmt(partial.total_seconds, 3) +
             "s (< 300s), " + std::to_string(failed) + " failing";
  return c;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return timed(c01_hemisphere, seed);
    case 2: return timed(c02_flat_disk, seed);
    case 3: return timed(c03_scaling, seed);
    case 4: return timed(c04_mckean, seed);
    case 5: return timed(c05_barta, seed);
    case 6: return timed(c06_certificate, seed);
    case 7: return timed(c07_cheng, seed);
    case 8: return timed(c08_bishop, seed);
    case 9: return timed(c09_wronskian, seed);
    case 10: return timed(c10_catenoid, seed);
    case 11: return timed(c11_stability, seed);
    case 12: return timed(c12_quasilinear, seed);
    case 13: return aggregate(run_partial(seed));
    default:
      throw std::invalid_argument("run_criterion: id must be in 1..13");
  }
}

SuiteResult run_all(std::uint64_t seed) {
  SuiteResult suite = run_partial(seed);
  suite.criteria.push_back(aggregate(suite));
  suite.all_pass = suite.all_pass && suite.criteria.back().pass;
  return suite;
}

std::string format_line(const CriterionResult& c) {
  std::ostringstream os;
  os << (c.pass ? "PASS" : "FAIL") << " criterion "
     << (c.id < 10 ? "0" : "") << c.id << " " << c.name << " (";
  os.precision(2);
  os << std::fixed << c.seconds << "s): " << c.detail;
  return os.str();
}

}  // namespace tonelab::accept
