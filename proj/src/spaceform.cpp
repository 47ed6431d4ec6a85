#include "tonelab/spaceform.hpp"

#include <cmath>
#include <stdexcept>

namespace tonelab::spaceform {

namespace {

void check_domain(double c, double t) {
  if (!(t >= 0.0)) throw std::domain_error("s_c/c_c: t must be nonnegative");
  if (!std::isfinite(c)) throw std::domain_error("s_c/c_c: c must be finite");
  if (c > kSeriesThreshold) {
    const double tmax = M_PI / std::sqrt(c);
    if (t > tmax * (1.0 + 1e-12))
      throw std::domain_error("s_c: t exceeds pi/sqrt(c) for c > 0");
  }
}

}  // namespace

double s_c(double c, double t) {
  check_domain(c, t);
  if (std::abs(c) < kSeriesThreshold) {
    // t - c t^3/6 + c^2 t^5/120
    const double t2 = t * t;
    return t * (1.0 - c * t2 / 6.0 * (1.0 - c * t2 / 20.0));
  }
  if (c > 0.0) {
    const double s = std::sqrt(c);
    return std::sin(s * t) / s;
  }
  const double s = std::sqrt(-c);
  return std::sinh(s * t) / s;
}

double c_c(double c, double t) {
  check_domain(c, t);
  if (std::abs(c) < kSeriesThreshold) {
    // 1 - c t^2/2 + c^2 t^4/24
    const double t2 = t * t;
    return 1.0 - c * t2 / 2.0 * (1.0 - c * t2 / 12.0);
  }
  if (c > 0.0) return std::cos(std::sqrt(c) * t);
  return std::cosh(std::sqrt(-c) * t);
}

double s_c_dd(double c, double t) { return -c * s_c(c, t); }

std::optional<Violation> validate_ball(double c, int n, double r,
                                       BallContext context) {
  if (n < 2) return Violation{"n >= 2 required"};
  if (!(r > 0.0)) return Violation{"r > 0 required"};
  if (!std::isfinite(c) || !std::isfinite(r))
    return Violation{"c and r must be finite"};
  if (c > 0.0) {
    const double cap =
        (context == BallContext::Cheng) ? M_PI / std::sqrt(c)
                                        : M_PI / (2.0 * std::sqrt(c));
    if (r >= cap) {
      return Violation{context == BallContext::Cheng
                           ? "r < pi/sqrt(c) required for c > 0"
                           : "r < pi/(2 sqrt(c)) required for c > 0"};
    }
  }
  return std::nullopt;
}

ModelBall::ModelBall(double c_, int n_, double r_) : c(c_), n(n_), r(r_) {
  if (auto v = validate_ball(c, n, r, BallContext::Cheng))
    throw std::invalid_argument("ModelBall: " + v->constraint);
}

}  // namespace tonelab::spaceform
