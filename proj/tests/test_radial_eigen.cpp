#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tonelab/radial_eigen.hpp"

using namespace tonelab;
using spaceform::ModelBall;

TEST_SUITE_BEGIN("radial_eigen");

TEST_CASE("hemisphere eigenvalue is exactly n") {
  // v = cos t solves the c = 1 equation with lambda = n on [0, pi/2]
  for (int n : {2, 3, 5}) {
    const auto res = radial::model_ball_lambda1(ModelBall(1.0, n, M_PI_2), 1e-10);
    CHECK(std::abs(res.lambda1 - n) < 1e-8);
    CHECK(res.bracket.second - res.bracket.first <= 2e-10);
    CHECK(res.lambda1 >= res.bracket.first);
    CHECK(res.lambda1 <= res.bracket.second);
  }
}

TEST_CASE("flat disk matches the Bessel oracle") {
  const auto res = radial::model_ball_lambda1(ModelBall(0.0, 2, 1.0), 1e-10);
  CHECK(std::abs(res.lambda1 - oracle::j0_zero_squared()) < 1e-8);
  // eigenfunction profile matches J0(j01 t) up to normalization v(0) = 1
  const double z = oracle::j0_first_zero();
  for (size_t i = 0; i < res.t.size(); i += 256)
    CHECK(std::abs(res.v[i] - oracle::bessel_j0(z * res.t[i])) < 1e-7);
}

TEST_CASE("flat 3-ball eigenvalue is pi^2 / r^2") {
  const auto res = radial::model_ball_lambda1(ModelBall(0.0, 3, 2.0), 1e-10);
  CHECK(std::abs(res.lambda1 - M_PI * M_PI / 4.0) < 1e-8);
}

TEST_CASE("lambda = 0 shot is identically one") {
  const auto shot = radial::integrate_radial(0.0, 2, 1.0, 256, 0.0);
  CHECK(!shot.crossed);
  for (double vi : shot.v) CHECK(vi == 1.0);
}

TEST_CASE("crossing indicator is monotone in lambda") {
  const auto res = radial::model_ball_lambda1(ModelBall(0.0, 2, 1.0), 1e-10);
  const auto below = radial::integrate_radial(0.0, 2, 1.0, 4096, res.lambda1 - 0.1);
  const auto above = radial::integrate_radial(0.0, 2, 1.0, 4096, res.lambda1 + 0.1);
  CHECK(!below.crossed);
  CHECK(below.v_end > 0.0);
  CHECK(above.crossed);
}

TEST_CASE("eigenfunction is positive with small ODE defect") {
  struct Case { double c; int n; double r; };
  for (const Case k : {Case{-1.0, 2, 2.0}, Case{0.0, 2, 1.0}, Case{1.0, 2, 1.4},
                       Case{0.0, 3, 1.0}, Case{-1.0, 4, 1.5}}) {
    const auto res = radial::model_ball_lambda1(ModelBall(k.c, k.n, k.r), 1e-10);
    for (size_t i = 0; i + 1 < res.v.size(); ++i) CHECK(res.v[i] > 0.0);
    CHECK(res.residual < 1e-6 * (1.0 + res.lambda1));
    CHECK(res.iterations > 0);
  }
}

TEST_CASE("Euclidean scaling lambda(r) = lambda(1)/r^2 is exact at powers of two") {
  const double base = radial::model_ball_lambda1(ModelBall(0.0, 2, 1.0), 1e-10).lambda1;
  CHECK(radial::model_ball_lambda1(ModelBall(0.0, 2, 2.0), 2.5e-11).lambda1 * 4.0 == base);
  CHECK(radial::model_ball_lambda1(ModelBall(0.0, 2, 0.5), 4e-10).lambda1 * 0.25 == base);
}

TEST_CASE("curvature rescaling lambda(c, r) = |c| lambda(sign c, sqrt|c| r)") {
  for (double c : {-2.0, -0.5, 0.5, 2.0}) {
    const double s = std::sqrt(std::abs(c)), sign = (c > 0) ? 1.0 : -1.0;
    const double lhs = radial::model_ball_lambda1(ModelBall(c, 2, 1.0), 1e-12).lambda1;
    const double rhs =
        std::abs(c) *
        radial::model_ball_lambda1(ModelBall(sign, 2, s), 1e-12).lambda1;
    CHECK(std::abs(lhs - rhs) < 1e-8 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("eigenvalue decreases strictly with the radius") {
  for (double c : {-1.0, 0.0, 1.0}) {
    double prev = 1e300;
    for (int k = 0; k < 10; ++k) {
      const double r = 0.5 + k * ((c > 0 ? 1.0 : 1.5) / 9.0);
      const double lam =
          radial::model_ball_lambda1(ModelBall(c, 2, r), 1e-10, 2048).lambda1;
      CHECK(lam < prev);
      prev = lam;
    }
  }
}

TEST_CASE("hyperbolic ball at r = 50 against the dense matrix oracle") {
  for (int n : {2, 3}) {
    const auto res = radial::model_ball_lambda1(ModelBall(-1.0, n, 50.0), 1e-10);
    const double ref = oracle::radial_lambda1_fv(
        [n](double t) { return oracle::model_weight(-1.0, t, n); }, 50.0, 16384);
    CHECK(std::abs(res.lambda1 - ref) < 5e-4);
    CHECK(res.lambda1 > (n - 1) * (n - 1) / 4.0);  // strict asymptote bound
  }
}

TEST_CASE("warped solver agrees with the model solver on sampled S_c") {
  for (double c : {-1.0, 0.0}) {
    const auto warp = WarpProfile::model(c, 2.0, 4096);
    const double lw = radial::warped_ball_lambda1(warp, 3, 1e-10).lambda1;
    const double lm = radial::model_ball_lambda1(ModelBall(c, 3, 2.0), 1e-10).lambda1;
    CHECK(std::abs(lw - lm) < 1e-6);
  }
}

TEST_CASE("analytic non-model warp against the dense matrix oracle") {
  // f = sinh t + 0.1 t^3 has radial curvature <= -1 everywhere
  auto f = [](double t) { return std::sinh(t) + 0.1 * t * t * t; };
  auto df = [](double t) { return std::cosh(t) + 0.3 * t * t; };
  auto d2f = [](double t) { return std::sinh(t) + 0.6 * t; };
  const auto warp = WarpProfile::from_function(1.0, 2048, f, df, d2f);
  const auto res = radial::warped_ball_lambda1(warp, 2, 1e-10);
  const double ref = oracle::radial_lambda1_fv(f, 1.0, 8192);
  CHECK(std::abs(res.lambda1 - ref) < 5e-4);
  // comparison direction: above the model hyperbolic disk of the same radius
  const double lm = radial::model_ball_lambda1(ModelBall(-1.0, 2, 1.0), 1e-10).lambda1;
  CHECK(res.lambda1 >= lm - 1e-10);
}

TEST_CASE("bad inputs throw") {
  CHECK_THROWS_AS(radial::model_ball_lambda1(ModelBall(0.0, 2, 1.0), -1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(radial::model_ball_lambda1(ModelBall(0.0, 2, 1.0), 1e-10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(radial::integrate_radial(0.0, 2, 1.0, 256, -0.5),
                  std::invalid_argument);
}

TEST_SUITE_END();
