#include "tonelab/tone_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tonelab/radial_eigen.hpp"

namespace tonelab::tone_bounds {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BoundReport barta_bounds(const discrete::DiscreteDomain& domain,
                         const Eigen::VectorXd& f, double lambda1_ref,
                         double upper_cap) {
  if (f.size() != domain.num_nodes())
    throw std::invalid_argument("barta_bounds: field size mismatch");
  for (int i = 0; i < domain.num_nodes(); ++i) {
    if (domain.is_boundary[i] && f[i] != 0.0)
      throw std::invalid_argument("barta_bounds: f must vanish on the boundary");
    if (!domain.is_boundary[i] && !(f[i] > 0.0))
      throw std::invalid_argument("barta_bounds: f must be positive at interior nodes");
  }
  const Eigen::VectorXd mLf = discrete::minus_laplacian(domain, f);
  double lo = kInf, hi = -kInf;
  for (int i = 0; i < domain.num_nodes(); ++i) {
    if (domain.is_boundary[i]) continue;
    const double q = mLf[i] / f[i];
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  if (hi > upper_cap) hi = kInf;

  BoundReport rep;
  rep.source = "Barta";
  rep.lower = lo;
  rep.upper = hi;
  rep.lambda1 = lambda1_ref;
  rep.margin_lower = lambda1_ref - lo;
  rep.margin_upper = hi - lambda1_ref;
  rep.pass = (lo <= lambda1_ref) && (lambda1_ref <= hi);
  return rep;
}

BoundReport vfield_lower_bound(const discrete::DiscreteDomain& domain,
                               const discrete::VectorField& X,
                               double lambda1_ref, int boundary_layer,
                               double slack) {
  if (X.t.size() != domain.num_nodes())
    throw std::invalid_argument("vfield_lower_bound: field size mismatch");
  const Eigen::VectorXd divX = discrete::divergence(domain, X);
  double lo = kInf;
  for (int i = 0; i < domain.num_nodes(); ++i) {
    if (domain.is_boundary[i] || domain.layer[i] <= boundary_layer) continue;
    double x2 = X.t[i] * X.t[i];
    if (X.theta.size() > 0) x2 += X.theta[i] * X.theta[i];
    lo = std::min(lo, divX[i] - x2);
  }

  BoundReport rep;
  rep.source = "VectorField";
  rep.lower = lo;
  rep.upper = kInf;
  rep.lambda1 = lambda1_ref;
  rep.margin_lower = lambda1_ref - lo;
  rep.margin_upper = kInf;
  rep.pass = lo <= lambda1_ref + slack * std::max(1.0, std::abs(lambda1_ref));
  return rep;
}

discrete::VectorField optimal_vfield(const discrete::DiscreteDomain& domain,
                                     double eig_tol) {
  auto [lambda, u] = discrete::smallest_eigenpair(domain, eig_tol);
  (void)lambda;
  discrete::VectorField X = discrete::grad_log(domain, u);
  X.t = -X.t;
  if (X.theta.size() > 0) X.theta = -X.theta;
  return X;
}

BoundReport mckean_report(int n, double r, double tol, int N) {
  spaceform::ModelBall ball(-1.0, n, r);
  const auto res = radial::model_ball_lambda1(ball, tol, N);
  const double asymptote = (n - 1) * (n - 1) / 4.0;

  BoundReport rep;
  rep.source = "McKean";
  rep.lower = asymptote;
  rep.upper = kInf;
  rep.lambda1 = res.lambda1;
  rep.margin_lower = res.lambda1 - asymptote;
  rep.margin_upper = kInf;
  rep.pass = res.lambda1 > asymptote;
  return rep;
}

}  // namespace tonelab::tone_bounds
