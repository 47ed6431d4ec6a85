#include "tonelab/warp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tonelab/spaceform.hpp"

namespace tonelab {

namespace {

int segment_of(const WarpProfile& w, double t) {
  int i = static_cast<int>(std::floor(t / w.h()));
  return std::clamp(i, 0, w.N - 1);
}

}  // namespace

double WarpProfile::eval_f(double tt) const {
  const int i = segment_of(*this, tt);
  const double hh = h();
  const double s = (tt - t(i)) / hh;
  const double s2 = s * s, s3 = s2 * s;
  // cubic Hermite basis
  return (2 * s3 - 3 * s2 + 1) * f[i] + (s3 - 2 * s2 + s) * hh * df[i] +
         (-2 * s3 + 3 * s2) * f[i + 1] + (s3 - s2) * hh * df[i + 1];
}

double WarpProfile::eval_df(double tt) const {
  const int i = segment_of(*this, tt);
  const double hh = h();
  const double s = (tt - t(i)) / hh;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * df[i] + (s3 - 2 * s2 + s) * hh * d2f[i] +
         (-2 * s3 + 3 * s2) * df[i + 1] + (s3 - s2) * hh * d2f[i + 1];
}

void WarpProfile::validate() const {
  if (N < 2 || r <= 0.0) throw std::invalid_argument("WarpProfile: bad grid");
  if (f.size() != size_t(N + 1) || df.size() != size_t(N + 1) ||
      d2f.size() != size_t(N + 1))
    throw std::invalid_argument("WarpProfile: sample sizes do not match N");
  if (std::abs(f[0]) > 1e-10 || std::abs(df[0] - 1.0) > 1e-10)
    throw std::invalid_argument("WarpProfile: f(0)=0, f'(0)=1 required");
  for (int i = 1; i <= N; ++i)
    if (!(f[i] > 0.0))
      throw std::invalid_argument("WarpProfile: f must be positive for t > 0");
  // central differences of f must match df to O(h^2)
  const double hh = h();
  double scale = 0.0;
  for (int i = 0; i <= N; ++i) scale = std::max(scale, std::abs(df[i]));
  for (int i = 1; i < N; ++i) {
    const double cd = (f[i + 1] - f[i - 1]) / (2 * hh);
    if (std::abs(cd - df[i]) > 10.0 * hh * hh * (1.0 + scale) * (1.0 + scale))
      throw std::invalid_argument("WarpProfile: df inconsistent with f samples");
  }
}

WarpProfile WarpProfile::model(double c, double r, int N) {
  WarpProfile w;
  w.r = r;
  w.N = N;
  w.f.resize(N + 1);
  w.df.resize(N + 1);
  w.d2f.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double t = w.t(i);
    w.f[i] = spaceform::s_c(c, t);
    w.df[i] = spaceform::c_c(c, t);
    w.d2f[i] = -c * w.f[i];
  }
  return w;
}

WarpProfile WarpProfile::from_function(double r, int N,
                                       const std::function<double(double)>& f,
                                       const std::function<double(double)>& df,
                                       const std::function<double(double)>& d2f) {
  WarpProfile w;
  w.r = r;
  w.N = N;
  w.f.resize(N + 1);
  w.df.resize(N + 1);
  w.d2f.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double t = w.t(i);
    w.f[i] = f(t);
    w.df[i] = df(t);
    w.d2f[i] = d2f(t);
  }
  return w;
}

std::vector<double> radial_curvature(const WarpProfile& warp) {
  std::vector<double> k(warp.N + 1);
  for (int i = 1; i <= warp.N; ++i) k[i] = -warp.d2f[i] / warp.f[i];
  // limit at t = 0 of the 0/0 quotient: cubic extrapolation from the first
  // interior nodes (exact for constant curvature; O(h^4) error keeps
  // generated warps inside the K <= c hypothesis gate)
  k[0] = (warp.N >= 4) ? 4.0 * k[1] - 6.0 * k[2] + 4.0 * k[3] - k[4]
                       : 2.0 * k[1] - k[2];
  return k;
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t trial) {
  // splitmix64 over master XOR-folded with the trial index
  std::uint64_t z = master ^ (trial * 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

WarpProfile random_warp(double c, double r, std::uint64_t seed,
                        double roughness, int N) {
  if (c > 0.0 && r >= M_PI / std::sqrt(c))
    throw std::invalid_argument("random_warp: r < pi/sqrt(c) required for c > 0");
  if (roughness == 0.0) return WarpProfile::model(c, r, N);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  // q >= 0 with q(0) = q'(0) = 0: each mode (1 - cos(2 pi k t / r + 0)) >= 0;
  // shifted modes are kept nonnegative by the (1 + sin) form, and the whole
  // sum is multiplied by a t^2-vanishing window.
  constexpr int kModes = 4;
  double a[kModes], ph[kModes];
  for (int k = 0; k < kModes; ++k) {
    a[k] = amp(rng);
    ph[k] = phase(rng);
  }
  auto q = [&](double t) {
    const double s = std::sin(M_PI * t / (2.0 * r));  // in [0,1], vanishes at 0
    double sum = 0.0;
    for (int k = 0; k < kModes; ++k)
      sum += a[k] * 0.5 * (1.0 + std::sin(2.0 * M_PI * (k + 1) * t / r + ph[k]));
    return roughness * s * s * sum;
  };

  // RK4 on (f, f'), f'' = -c f + q(t)
  WarpProfile w;
  w.r = r;
  w.N = N;
  w.f.assign(N + 1, 0.0);
  w.df.assign(N + 1, 0.0);
  w.d2f.assign(N + 1, 0.0);
  w.f[0] = 0.0;
  w.df[0] = 1.0;
  w.d2f[0] = q(0.0);
  const double h = w.h();
  double y0 = 0.0, y1 = 1.0;
  for (int i = 0; i < N; ++i) {
    const double t = w.t(i);
    auto acc = [&](double tt, double ff) { return -c * ff + q(tt); };
    const double k1v = y1, k1a = acc(t, y0);
    const double k2v = y1 + 0.5 * h * k1a, k2a = acc(t + 0.5 * h, y0 + 0.5 * h * k1v);
    const double k3v = y1 + 0.5 * h * k2a, k3a = acc(t + 0.5 * h, y0 + 0.5 * h * k2v);
    const double k4v = y1 + h * k3a, k4a = acc(t + h, y0 + h * k3v);
    y0 += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    y1 += h / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
    w.f[i + 1] = y0;
    w.df[i + 1] = y1;
    w.d2f[i + 1] = acc(w.t(i + 1), y0);
  }
  return w;
}

}  // namespace tonelab
