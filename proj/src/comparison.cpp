#include "tonelab/comparison.hpp"

#include <cmath>
#include <stdexcept>

#include "tonelab/discrete_domain.hpp"
#include "tonelab/radial_eigen.hpp"
#include "tonelab/spaceform.hpp"

namespace tonelab::comparison {

namespace {

constexpr double kHypTol = 1e-8;  // slack on the curvature hypothesis K <= c
constexpr double kEigTol = 1e-10;

bool hypothesis_ok(const WarpProfile& warp, double c) {
  const auto K = radial_curvature(warp);
  for (double k : K)
    if (k > c + kHypTol) return false;
  return true;
}

void require_mu_curvature(int c) {
  if (c != -1 && c != 0 && c != 1)
    throw std::invalid_argument(
        "mu machinery: c must be -1, 0 or 1 (rescale first)");
}

}  // namespace

ChengReport cheng_compare(const WarpProfile& warp, double c, int n,
                          double tol) {
  warp.validate();
  ChengReport rep;
  if (!hypothesis_ok(warp, c)) {
    rep.status = "hypothesis_violated";
    return rep;
  }
  rep.status = "ok";
  rep.lambda_warp = radial::warped_ball_lambda1(warp, n, kEigTol).lambda1;
  spaceform::ModelBall ball(c, n, warp.r);
  rep.lambda_model = radial::model_ball_lambda1(ball, kEigTol, warp.N).lambda1;
  rep.margin = rep.lambda_warp - rep.lambda_model;
  rep.pass = rep.margin >= -tol;
  return rep;
}

BishopReport bishop_check(const WarpProfile& warp, double c, int n, double tol,
                          double rigidity_tol) {
  warp.validate();
  if (c > 0.0 && warp.r >= M_PI / std::sqrt(c))
    throw std::invalid_argument("bishop_check: r < pi/sqrt(c) required for c > 0");
  BishopReport rep;
  if (!hypothesis_ok(warp, c)) {
    rep.status = "hypothesis_violated";
    return rep;
  }
  rep.status = "ok";

  const int N = warp.N;
  const double h = warp.h();
  std::vector<double> ratio(N + 1), gap(N + 1);
  ratio[0] = 1.0;  // limit of (f/S_c)^{n-1} at t = 0
  gap[0] = 0.0;
  for (int i = 1; i <= N; ++i) {
    const double s = spaceform::s_c(c, warp.t(i));
    ratio[i] = std::pow(warp.f[i] / s, n - 1);
    gap[i] = std::pow(warp.f[i], n - 1) - std::pow(s, n - 1);
  }

  rep.min_ratio_derivative = 0.0;
  for (int i = 1; i < N; ++i) {
    const double d = (ratio[i + 1] - ratio[i - 1]) / (2 * h);
    if (i == 1 || d < rep.min_ratio_derivative) rep.min_ratio_derivative = d;
  }
  rep.min_density_gap = gap[1];
  for (int i = 1; i <= N; ++i)
    rep.min_density_gap = std::min(rep.min_density_gap, gap[i]);

  bool prefix_open = true;
  rep.rigidity_prefix = true;
  for (int i = 0; i <= N; ++i) {
    const bool rigid = std::abs(ratio[i] - 1.0) <= rigidity_tol;
    if (rigid) {
      ++rep.rigidity_nodes;
      if (!prefix_open) rep.rigidity_prefix = false;
    } else {
      prefix_open = false;
    }
  }
  rep.pass = rep.min_ratio_derivative >= -tol && rep.min_density_gap >= -tol;
  return rep;
}

MuProfile mu_profile(int c, int m, double lambda1, double r, int N) {
  require_mu_curvature(c);
  if (m < 2) throw std::invalid_argument("mu_profile: m >= 2 required");
  if (!(lambda1 > 0.0) || !(r > 0.0))
    throw std::invalid_argument("mu_profile: lambda1 > 0 and r > 0 required");
  if (c == 1 && r >= M_PI / 2.0)
    throw std::invalid_argument("mu_profile: r < pi/2 required for c = 1");
  if (N < 2) throw std::invalid_argument("mu_profile: N >= 2 required");

  MuProfile p;
  p.c = c;
  p.m = m;
  p.lambda1 = lambda1;
  p.t.resize(N + 1);
  p.mu.resize(N + 1);
  p.dmu.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double t = i * r / N;
    p.t[i] = t;
    if (c == 0) {
      p.mu[i] = std::exp(-lambda1 * t * t / (2.0 * m));
      p.dmu[i] = -(lambda1 * t / m) * p.mu[i];
    } else {
      const double C = spaceform::c_c(c, t);
      const double S = spaceform::s_c(c, t);
      p.mu[i] = std::pow(C, -lambda1 / m);
      // d/dt C^{-l/m} = (-l/m) C^{-l/m - 1} C' with C' = -c S
      p.dmu[i] = (c * lambda1 / m) * S * std::pow(C, -lambda1 / m - 1.0);
    }
  }
  return p;
}

WronskianReport wronskian_negativity(int c, int m, double r, int N,
                                     double tol) {
  require_mu_curvature(c);
  if (c == 1 && r >= M_PI / 2.0)
    throw std::invalid_argument(
        "wronskian_negativity: r < pi/2 required for c = 1");

  spaceform::ModelBall ball(static_cast<double>(c), m, r);
  const auto res = radial::model_ball_lambda1(ball, tol, N);
  // the eigenfunction was integrated at the crossing-free bracket end; use
  // that lambda for mu so the two profiles cancel consistently near t = 0
  const double lam = res.bracket.first;
  const MuProfile mu = mu_profile(c, m, lam, r, N);

  WronskianReport rep;
  rep.lambda1 = res.lambda1;
  for (int i = 1; i < N; ++i) {
    const double w = res.dv[i] * mu.mu[i] - mu.dmu[i] * res.v[i];
    const double t = res.t[i];
    const double e = m * (spaceform::c_c(c, t) / spaceform::s_c(c, t)) *
                         res.dv[i] +
                     lam * res.v[i];
    if (i == 1) {
      rep.max_w = w;
      rep.max_equiv = e;
    } else {
      rep.max_w = std::max(rep.max_w, w);
      rep.max_equiv = std::max(rep.max_equiv, e);
    }
  }
  rep.pass = rep.max_w < 0.0 && rep.max_equiv < 0.0;
  return rep;
}

BracketReport bracket_positivity(int c, int m, double lambda1, double r,
                                 int N) {
  if (c != -1 && c != 1)
    throw std::invalid_argument("bracket_positivity: c must be -1 or 1");
  if (c == 1 && r >= M_PI / 2.0)
    throw std::invalid_argument("bracket_positivity: r < pi/2 required for c = 1");

  BracketReport rep;
  for (int i = 1; i < N; ++i) {
    const double t = i * r / N;
    const double C = spaceform::c_c(c, t);
    const double S = spaceform::s_c(c, t);
    const double ratio2 = (S * S) / (C * C);
    const double b =
        (c == -1)
            ? 1.0 / m - 1.0 / (m * C * C) + (lambda1 / (m * m)) * ratio2
            : 2.0 - 1.0 / m + 1.0 / (m * C * C) + (lambda1 / (m * m)) * ratio2;
    if (i == 1 || b < rep.min_value) rep.min_value = b;
  }
  rep.pass = rep.min_value > 0.0;
  return rep;
}

CatenoidReport submanifold_bound_check(double r, int N, int Ntheta) {
  if (!(r > 1.0))
    throw std::invalid_argument(
        "submanifold_bound_check: r > 1 required (empty intersection with the "
        "ambient ball otherwise)");

  CatenoidReport rep;
  rep.r = r;
  // half-width of {u : cosh^2 u + u^2 < r^2}
  auto g = [&](double u) { return std::cosh(u) * std::cosh(u) + u * u - r * r; };
  double lo = 0.0, hi = std::acosh(r) + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  rep.u_r = 0.5 * (lo + hi);

  auto cosh2 = [](double u) { return std::cosh(u) * std::cosh(u); };
  auto one = [](double) { return 1.0; };
  const auto d1 = discrete::build_interval_domain(-rep.u_r, rep.u_r, N, one, cosh2);
  rep.lambda_1d = discrete::smallest_eigenpair(d1, 1e-12).first;

  auto ch = [](double u) { return std::cosh(u); };
  const auto d2 = discrete::build_band_domain(-rep.u_r, rep.u_r, N, Ntheta, ch, ch);
  rep.lambda_2d = discrete::smallest_eigenpair(d2, 1e-12).first;

  spaceform::ModelBall disk(0.0, 2, r);
  rep.flat_disk_bound = radial::model_ball_lambda1(disk, kEigTol).lambda1;
  rep.margin = rep.lambda_1d - rep.flat_disk_bound;
  rep.agreement = std::abs(rep.lambda_1d - rep.lambda_2d);
  rep.pass = rep.margin > 0.0 && rep.agreement <= 1e-3;
  return rep;
}

StabilityResult stability_check(int n, double r, double supA2,
                                const std::function<double(double)>& a2_profile,
                                int N) {
  if (n < 2) throw std::invalid_argument("stability_check: n >= 2 required");
  if (!(r > 0.0)) throw std::invalid_argument("stability_check: r > 0 required");
  if (!(supA2 >= 0.0))
    throw std::invalid_argument("stability_check: sup|A|^2 >= 0 required");

  StabilityResult res;
  res.sup_a2 = supA2;
  spaceform::ModelBall ball(0.0, n, r);
  res.threshold = radial::model_ball_lambda1(ball, kEigTol).lambda1;
  res.verdict = (supA2 <= res.threshold) ? "stable" : "inconclusive";

  if (a2_profile) {
    const auto warp = WarpProfile::model(0.0, r, N);
    const auto dom = discrete::build_radial_domain(warp, n, N);
    auto sys = discrete::interior_system(dom);
    for (int a = 0; a < static_cast<int>(sys.idx.size()); ++a)
      sys.K.coeffRef(a, a) -=
          sys.m[a] * a2_profile(dom.node_t[sys.idx[a]]);
    sys.K.makeCompressed();
    res.stability_eig = discrete::smallest_pencil_eigenvalue(sys.K, sys.m, 1e-10);
    res.has_eig = true;
  }
  return res;
}

}  // namespace tonelab::comparison
