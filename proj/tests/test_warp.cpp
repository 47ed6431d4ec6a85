#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "tonelab/spaceform.hpp"
#include "tonelab/warp.hpp"

using namespace tonelab;

TEST_SUITE_BEGIN("warp");

TEST_CASE("model profile samples S_c and passes validation") {
  const auto w = WarpProfile::model(-1.0, 2.0, 512);
  CHECK_NOTHROW(w.validate());
  CHECK(w.f[0] == 0.0);
  CHECK(w.df[0] == 1.0);
  CHECK(w.f[512] == doctest::Approx(std::sinh(2.0)).epsilon(1e-15));
  // Hermite evaluation reproduces the samples and interpolates to O(h^4)
  CHECK(w.eval_f(w.t(100)) == doctest::Approx(w.f[100]).epsilon(1e-15));
  const double tm = w.t(100) + 0.5 * w.h();
  CHECK(std::abs(w.eval_f(tm) - std::sinh(tm)) < 1e-9);
  CHECK(std::abs(w.eval_df(tm) - std::cosh(tm)) < 1e-7);
}

TEST_CASE("validation rejects inconsistent samples") {
  auto w = WarpProfile::model(0.0, 1.0, 64);
  w.df[32] += 0.05;  // derivative no longer matches the f samples
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);

  auto w2 = WarpProfile::model(0.0, 1.0, 64);
  w2.f[10] = -w2.f[10];
  CHECK_THROWS_AS(w2.validate(), std::invalid_argument);

  auto w3 = WarpProfile::model(0.0, 1.0, 64);
  w3.df[0] = 2.0;
  CHECK_THROWS_AS(w3.validate(), std::invalid_argument);
}

TEST_CASE("radial curvature of model warps is constant, pole included") {
  for (double c : {-1.0, 0.0, 1.0}) {
    const double r = (c > 0.0) ? 1.5 : 2.0;
    const auto k = radial_curvature(WarpProfile::model(c, r, 256));
    for (double ki : k) CHECK(std::abs(ki - c) < 1e-10);
  }
}

TEST_CASE("generated warps stay in the curvature class K <= c") {
  for (double c : {-1.0, 0.0, 1.0}) {
    const double r = (c > 0.0) ? 1.5 : 2.0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const auto w = random_warp(c, r, split_seed(99, s), 0.5, 2048);
      CHECK_NOTHROW(w.validate());
      const auto k = radial_curvature(w);
      for (double ki : k) CHECK(ki <= c + 1e-8);
    }
  }
}

TEST_CASE("zero roughness reproduces the model exactly") {
  const auto a = random_warp(-1.0, 2.0, 1234, 0.0, 256);
  const auto b = WarpProfile::model(-1.0, 2.0, 256);
  for (int i = 0; i <= 256; ++i) {
    CHECK(a.f[i] == b.f[i]);
    CHECK(a.df[i] == b.df[i]);
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const auto a = random_warp(0.0, 1.0, 42, 0.5, 512);
  const auto b = random_warp(0.0, 1.0, 42, 0.5, 512);
  const auto c = random_warp(0.0, 1.0, 43, 0.5, 512);
  bool same = true, differs = false;
  for (int i = 0; i <= 512; ++i) {
    same = same && (a.f[i] == b.f[i]);
    differs = differs || (a.f[i] != c.f[i]);
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("positive forcing only inflates the profile") {
  // f'' = -c f + q with q >= 0 gives f >= S_c pointwise
  const auto w = random_warp(1.0, 1.5, 7, 0.8, 1024);
  for (int i = 1; i <= 1024; ++i)
    CHECK(w.f[i] >= tonelab::spaceform::s_c(1.0, w.t(i)) - 1e-12);
}

TEST_CASE("random_warp rejects balls past the positive-curvature cap") {
  CHECK_THROWS_AS(random_warp(1.0, 3.5, 1, 0.5, 256), std::invalid_argument);
}

TEST_CASE("seed splitting is deterministic and collision-free in practice") {
  CHECK(split_seed(7, 3) == split_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 4096; ++t) seen.insert(split_seed(7, t));
  CHECK(seen.size() == 4096);
  CHECK(split_seed(7, 1) != split_seed(8, 1));
}

TEST_SUITE_END();
