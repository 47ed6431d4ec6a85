#include "tonelab/radial_eigen.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tonelab::radial {

namespace {

// g(t) = f'(t)/f(t); c0 is the radial curvature limit at t = 0, which sets
// the h^4 launch coefficient.
RadialShot shoot(const std::function<double(double)>& g, double c0, int n,
                 double r, int N, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("integrate_radial: lambda >= 0");
  if (N < 2) throw std::invalid_argument("integrate_radial: N >= 2");
  const double h = r / N;
  RadialShot shot;
  shot.v.assign(N + 1, 0.0);
  shot.dv.assign(N + 1, 0.0);
  shot.v[0] = 1.0;
  shot.dv[0] = 0.0;

  const double a2 = -lambda / (2.0 * n);
  const double a4 = a2 * (2.0 * c0 * (n - 1) / 3.0 - lambda) / (4.0 * (n + 2));
  double y = 1.0 + a2 * h * h + a4 * h * h * h * h;
  double w = 2.0 * a2 * h + 4.0 * a4 * h * h * h;
  shot.v[1] = y;
  shot.dv[1] = w;
  if (y <= 0.0) shot.crossed = true;

  auto acc = [&](double t, double vv, double ww) {
    return -(n - 1) * g(t) * ww - lambda * vv;
  };
  for (int i = 1; i < N; ++i) {
    const double t = i * h;
    const double k1v = w, k1w = acc(t, y, w);
    const double k2v = w + 0.5 * h * k1w;
    const double k2w = acc(t + 0.5 * h, y + 0.5 * h * k1v, w + 0.5 * h * k1w);
    const double k3v = w + 0.5 * h * k2w;
    const double k3w = acc(t + 0.5 * h, y + 0.5 * h * k2v, w + 0.5 * h * k2w);
    const double k4v = w + h * k3w;
    const double k4w = acc(t + h, y + h * k3v, w + h * k3w);
    y += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    w += h / 6.0 * (k1w + 2 * k2w + 2 * k3w + k4w);
    if (std::abs(y) > 1e12)
      throw std::runtime_error("integrate_radial: solution overflow (|v| > 1e12)");
    shot.v[i + 1] = y;
    shot.dv[i + 1] = w;
    if (y <= 0.0) shot.crossed = true;
  }
  shot.v_end = shot.v[N];
  return shot;
}

RadialEigenResult solve(const std::function<double(double)>& g, double c0,
                        int n, double r, int N, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("lambda1: tol > 0 required");
  auto crossed = [&](double lambda) { return shoot(g, c0, n, r, N, lambda).crossed; };

  // bracket [lo, hi] with no crossing at lo, crossing at hi
  double lo = 0.0, hi = 1.0 / (r * r);
  int iterations = 0;
  int doublings = 0;
  while (!crossed(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 60)
      throw std::runtime_error("lambda1: no sign change up to lambda = " +
                               std::to_string(hi));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    (crossed(mid) ? hi : lo) = mid;
    if (++iterations > 200) {
      std::ostringstream msg;
      msg << "lambda1: bisection did not converge; bracket [" << lo << ", "
          << hi << "]";
      throw std::runtime_error(msg.str());
    }
  }

  // eigenfunction from the crossing-free end of the bracket: positive on the
  // whole grid by construction of the sign function
  RadialShot shot = shoot(g, c0, n, r, N, lo);
  for (int i = 0; i < N; ++i)
    if (!(shot.v[i] > 0.0))
      throw std::runtime_error("lambda1: eigenfunction not positive on [0, r) "
                               "(higher mode captured)");

  RadialEigenResult res;
  res.lambda1 = 0.5 * (lo + hi);
  res.bracket = {lo, hi};
  res.iterations = iterations;
  res.t.resize(N + 1);
  const double h = r / N;
  for (int i = 0; i <= N; ++i) res.t[i] = i * h;
  res.v = std::move(shot.v);
  res.dv = std::move(shot.dv);
  double defect = 0.0;
  for (int i = 1; i < N; ++i) {
    const double d2 = (res.v[i + 1] - 2.0 * res.v[i] + res.v[i - 1]) / (h * h);
    const double d1 = (res.v[i + 1] - res.v[i - 1]) / (2.0 * h);
    defect = std::max(defect,
                      std::abs(d2 + (n - 1) * g(res.t[i]) * d1 + lo * res.v[i]));
  }
  res.residual = defect;
  return res;
}

}  // namespace

RadialShot integrate_radial(double c, int n, double r, int N, double lambda) {
  auto g = [c](double t) { return spaceform::c_c(c, t) / spaceform::s_c(c, t); };
  return shoot(g, c, n, r, N, lambda);
}

RadialShot integrate_radial(const WarpProfile& warp, int n, double lambda) {
  warp.validate();
  const double c0 = radial_curvature(warp)[0];
  auto g = [&warp](double t) { return warp.eval_df(t) / warp.eval_f(t); };
  return shoot(g, c0, n, warp.r, warp.N, lambda);
}

RadialEigenResult model_ball_lambda1(const spaceform::ModelBall& ball,
                                     double tol, int N) {
  auto g = [c = ball.c](double t) {
    return spaceform::c_c(c, t) / spaceform::s_c(c, t);
  };
  return solve(g, ball.c, ball.n, ball.r, N, tol);
}

RadialEigenResult warped_ball_lambda1(const WarpProfile& warp, int n,
                                      double tol) {
  if (n < 2) throw std::invalid_argument("warped_ball_lambda1: n >= 2");
  warp.validate();
  const double c0 = radial_curvature(warp)[0];
  auto g = [&warp](double t) { return warp.eval_df(t) / warp.eval_f(t); };
  return solve(g, c0, n, warp.r, warp.N, tol);
}

}  // namespace tonelab::radial
