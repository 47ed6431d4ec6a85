#pragma once

#include <optional>
#include <string>

// Closed-form model-geometry kernel: the comparison functions S_c, C_c of the
// simply connected space form of curvature c, and parameter validation for
// geodesic balls in those models.
namespace tonelab::spaceform {

// Below this |c| the trig/hyperbolic branches lose digits to cancellation and
// the power series in c is used instead (series truncation error < |c|^3 t^7 / 5040).
inline constexpr double kSeriesThreshold = 1e-6;

// S_c(t): solution of y'' + c y = 0 with y(0)=0, y'(0)=1.
//   sin(sqrt(c) t)/sqrt(c)   (c > 0)
//   t                        (c = 0)
//   sinh(sqrt(-c) t)/sqrt(-c) (c < 0)
// Throws std::domain_error for t < 0 or (c > 0 and t > pi/sqrt(c)).
double s_c(double c, double t);

// C_c(t) = S_c'(t): cos, 1, or cosh branch. Same domain restrictions as s_c.
double c_c(double c, double t);

// S_c''(t) = -c S_c(t).
double s_c_dd(double c, double t);

enum class BallContext { Cheng, Submanifold };

struct Violation {
  std::string constraint;
};

// Cheng context requires r < pi/sqrt(c) when c > 0; Submanifold context
// requires r < pi/(2 sqrt(c)). Never throws.
std::optional<Violation> validate_ball(double c, int n, double r,
                                       BallContext context);

// Geodesic ball B(r) in the n-dimensional space form of curvature c.
// The constructor enforces the Cheng-context constraints.
struct ModelBall {
  double c;
  int n;  // dimension (ambient n or submanifold m, depending on call site)
  double r;

  ModelBall(double c_, int n_, double r_);
};

}  // namespace tonelab::spaceform
