#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

// Independent reference computations used to cross-check the library:
// a Bessel J0 series, and a dense symmetric-tridiagonal eigensolver
// (Sturm-sequence bisection) for 1-D weighted Dirichlet problems. Nothing
// here calls into tonelab.
namespace oracle {

inline double bessel_j0(double x) {
  // power series sum (-1)^k (x/2)^{2k} / (k!)^2, fine for |x| < 10
  double term = 1.0, sum = 1.0;
  const double q = x * x / 4.0;
  for (int k = 1; k < 60; ++k) {
    term *= -q / (double(k) * double(k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// First positive zero of J0 by bisection on [2, 3].
inline double j0_first_zero() {
  double lo = 2.0, hi = 3.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bessel_j0(lo) * bessel_j0(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

inline double j0_zero_squared() {
  const double z = j0_first_zero();
  return z * z;
}

// Number of eigenvalues below x of the symmetric tridiagonal matrix with
// diagonal d and off-diagonal e (classic Sturm sequence with underflow guard).
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                       double x) {
  const int n = static_cast<int>(d.size());
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < n; ++i) {
    const double off = (i == 0) ? 0.0 : e[i - 1] * e[i - 1] / q;
    q = d[i] - x - off;
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

inline double tridiag_smallest_eig(const std::vector<double>& d,
                                   const std::vector<double>& e) {
  double hi = 0.0;
  for (size_t i = 0; i < d.size(); ++i) {
    double g = std::abs(d[i]);
    if (i > 0) g += std::abs(e[i - 1]);
    if (i + 1 < d.size()) g += std::abs(e[i]);
    hi = std::max(hi, g);
  }
  double lo = -hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(d, e, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Smallest Dirichlet eigenvalue of -(w v')'/w = lambda v on (0, r) with a
// Neumann (symmetry) end at 0: three-point finite volumes on t_i = i r / N,
// unknowns i = 0..N-1, reduced to standard symmetric-tridiagonal form and
// solved by Sturm bisection.
inline double radial_lambda1_fv(const std::function<double(double)>& w,
                                double r, int N) {
  const double h = r / N;
  std::vector<double> a(N), m(N);  // edge conductances, cell masses
  for (int i = 0; i < N; ++i) a[i] = w((i + 0.5) * h) / h;
  m[0] = w(0.25 * h) * 0.5 * h;
  for (int i = 1; i < N; ++i) m[i] = w(i * h) * h;
  std::vector<double> d(N), e(N - 1);
  for (int i = 0; i < N; ++i) {
    const double left = (i == 0) ? 0.0 : a[i - 1];
    d[i] = (left + a[i]) / m[i];
  }
  for (int i = 0; i + 1 < N; ++i) e[i] = -a[i] / std::sqrt(m[i] * m[i + 1]);
  return tridiag_smallest_eig(d, e);
}

inline double model_weight(double c, double t, int n) {
  double s;
  if (c > 0.0)
    s = std::sin(std::sqrt(c) * t) / std::sqrt(c);
  else if (c < 0.0)
    s = std::sinh(std::sqrt(-c) * t) / std::sqrt(-c);
  else
    s = t;
  return std::pow(s, n - 1);
}

}  // namespace oracle
