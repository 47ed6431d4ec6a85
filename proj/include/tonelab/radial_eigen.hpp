#pragma once

#include <utility>
#include <vector>

#include "tonelab/spaceform.hpp"
#include "tonelab/warp.hpp"

// Shooting-method solver for the first Dirichlet eigenvalue of the radial
// operator v'' + (n-1)(f'/f) v' + lambda v on [0, r], v(0)=1, v'(0)=0,
// v(r)=0, for model balls (f = S_c) and general warp profiles.
namespace tonelab::radial {

struct RadialEigenResult {
  double lambda1 = 0.0;
  std::vector<double> t, v, dv;     // grid, eigenfunction, derivative
  double residual = 0.0;            // max central-difference ODE defect
  int iterations = 0;               // bisection steps
  std::pair<double, double> bracket{0.0, 0.0};
};

// One shot of the inner integration at a fixed lambda.
struct RadialShot {
  std::vector<double> v, dv;
  double v_end = 0.0;
  bool crossed = false;  // v <= 0 somewhere on (0, r]
};

// Fixed-step RK4 on the grid t_i = i r / N, launched at t = h with the
// regular-singular-point series v(h) = 1 + a2 h^2 + a4 h^4,
// a2 = -lambda/(2n), a4 = a2 (2c(n-1)/3 - lambda) / (4(n+2)).
// Throws std::runtime_error if |v| exceeds 1e12.
RadialShot integrate_radial(double c, int n, double r, int N, double lambda);
RadialShot integrate_radial(const WarpProfile& warp, int n, double lambda);

// Bisection on lambda against the first-crossing sign; bracket found by
// doubling from 1/r^2. |lambda1 - lambda| <= tol; eigenfunction positive on
// [0, r). Throws std::runtime_error on non-convergence (message carries the
// final bracket) and std::invalid_argument on bad inputs.
RadialEigenResult model_ball_lambda1(const spaceform::ModelBall& ball,
                                     double tol, int N = 4096);
RadialEigenResult warped_ball_lambda1(const WarpProfile& warp, int n,
                                      double tol);

}  // namespace tonelab::radial
