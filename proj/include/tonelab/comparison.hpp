#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tonelab/warp.hpp"

// Numerical verification of the eigenvalue comparison machinery: curvature
// comparison for warped balls, volume-density monotonicity, the mu-Wronskian
// inequalities, the catenoid instance of the minimal-submanifold bound, and
// the hypersurface stability criterion.
namespace tonelab::comparison {

struct ChengReport {
  std::string status;       // "ok" | "hypothesis_violated"
  double lambda_warp = 0.0;
  double lambda_model = 0.0;
  double margin = 0.0;      // lambda_warp - lambda_model
  bool pass = false;        // margin >= -tol (meaningful only when status ok)
};

// Asserts lambda1(warp) >= lambda1(model ball of curvature c) when the
// radial curvature of the warp is <= c everywhere; hypothesis violations are
// reported as a status, never asserted against.
ChengReport cheng_compare(const WarpProfile& warp, double c, int n,
                          double tol = 1e-8);

struct BishopReport {
  std::string status;             // "ok" | "hypothesis_violated"
  double min_ratio_derivative = 0.0;  // min d/dt [(f/S_c)^{n-1}]
  double min_density_gap = 0.0;       // min (f^{n-1} - S_c^{n-1}) on (0, r]
  int rigidity_nodes = 0;             // nodes where the ratio is 1 within tol
  bool rigidity_prefix = false;       // rigidity nodes form a prefix from t=0
  bool pass = false;
};

// Volume-density monotonicity: (f^{n-1}/S_c^{n-1})' >= -tol and
// f^{n-1} >= S_c^{n-1} - tol under the same curvature hypothesis.
BishopReport bishop_check(const WarpProfile& warp, double c, int n,
                          double tol = 1e-8, double rigidity_tol = 1e-9);

struct MuProfile {
  int c = 0;       // normalized curvature in {-1, 0, 1}
  int m = 2;
  double lambda1 = 0.0;
  std::vector<double> t, mu, dmu;
};

// mu = exp(-lambda1 t^2 / (2m)) for c = 0 and C_c(t)^{-lambda1/m} for
// c = +-1, with analytic derivatives. Rejects c outside {-1, 0, 1} and, for
// c = 1, r >= pi/2.
MuProfile mu_profile(int c, int m, double lambda1, double r, int N = 4096);

struct WronskianReport {
  double lambda1 = 0.0;
  double max_w = 0.0;      // max over interior nodes of v' mu - mu' v  (< 0)
  double max_equiv = 0.0;  // max of m (C_c/S_c) v' + lambda1 v        (< 0)
  bool pass = false;
};

// Negativity of the Wronskian of the radial eigenfunction v (model ball of
// dimension m) against mu, plus the equivalent first-order form.
WronskianReport wronskian_negativity(int c, int m, double r, int N = 4096,
                                     double tol = 1e-10);

struct BracketReport {
  double min_value = 0.0;  // min over interior nodes
  bool pass = false;       // min > 0
};

// Positivity of the curvature correction bracket appearing in the derivative
// of the weighted Wronskian: for c = -1, 1/m - 1/(m C^2) + (lambda1/m^2) S^2/C^2;
// for c = +1, 2 - 1/m + 1/(m C^2) + (lambda1/m^2) S^2/C^2.
BracketReport bracket_positivity(int c, int m, double lambda1, double r,
                                 int N = 4096);

struct CatenoidReport {
  double r = 0.0;
  double u_r = 0.0;        // half-width of the conformal coordinate interval
  double lambda_1d = 0.0;  // lowest theta-independent Dirichlet mode
  double lambda_2d = 0.0;  // full 2-D discretization of the same region
  double flat_disk_bound = 0.0;  // lambda1 of the flat 2-disk of radius r
  double margin = 0.0;           // lambda_1d - flat_disk_bound
  double agreement = 0.0;        // |lambda_1d - lambda_2d|
  bool pass = false;
};

// Catenoid (meridian cosh u) region cut out by the ambient ball of radius r
// centered at the neck-circle center: Omega = {u : cosh^2 u + u^2 < r^2}.
// Verifies lambda1(Omega) >= lambda1(flat 2-disk of radius r).
CatenoidReport submanifold_bound_check(double r, int N = 2048,
                                       int Ntheta = 64);

struct StabilityResult {
  std::string verdict;        // "stable" | "inconclusive"
  double threshold = 0.0;     // lambda1 of the flat n-ball of radius r
  double sup_a2 = 0.0;
  double stability_eig = 0.0; // smallest eig of -Laplacian - |A|^2 (if profile)
  bool has_eig = false;
};

// Stable iff sup |A|^2 <= lambda1(flat n-ball of radius r). When a sampled
// |A|^2 profile is supplied, also computes the smallest eigenvalue of the
// discrete stability operator on the flat model ball.
StabilityResult stability_check(int n, double r, double supA2,
                                const std::function<double(double)>& a2_profile = {},
                                int N = 1024);

}  // namespace tonelab::comparison
