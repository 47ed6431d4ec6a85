#pragma once

#include <cstdint>
#include <functional>
#include <vector>

// Sampled warping functions f(t) on [0, r] defining the rotationally
// symmetric metric dt^2 + f(t)^2 dtheta^2 (and its n-dimensional analogue
// with volume density f^{n-1}).
namespace tonelab {

struct WarpProfile {
  double r = 0.0;
  int N = 0;                    // grid size; t_i = i * r / N, i = 0..N
  std::vector<double> f, df, d2f;  // samples, size N+1

  double h() const { return r / N; }
  double t(int i) const { return i * r / N; }

  // Cubic Hermite evaluation between samples (f, df at the segment ends).
  double eval_f(double t) const;
  double eval_df(double t) const;

  // Throws std::invalid_argument if f(0) != 0, f'(0) != 1 (to 1e-10),
  // f <= 0 at an interior node, or the samples are mutually inconsistent.
  void validate() const;

  // f = S_c sampled in closed form.
  static WarpProfile model(double c, double r, int N);

  // Sample an analytic profile.
  static WarpProfile from_function(double r, int N,
                                   const std::function<double(double)>& f,
                                   const std::function<double(double)>& df,
                                   const std::function<double(double)>& d2f);
};

// Radial sectional curvature K_i = -f''(t_i)/f(t_i); the i = 0 value is the
// t -> 0 limit, recovered by extrapolation from the first interior nodes.
std::vector<double> radial_curvature(const WarpProfile& warp);

// Seeded warp generator for the K <= c hypothesis class: integrates
// f'' = -c f + q with q >= 0, q(0) = q'(0) = 0, f(0)=0, f'(0)=1, so that
// -f''/f <= c by construction. roughness = 0 reproduces S_c exactly.
WarpProfile random_warp(double c, double r, std::uint64_t seed,
                        double roughness, int N = 4096);

// Splitting rule for corpus sweeps: per-trial stream from (master seed, index).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t trial);

}  // namespace tonelab
