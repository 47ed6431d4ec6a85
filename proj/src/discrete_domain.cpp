#include "tonelab/discrete_domain.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <stdexcept>

namespace tonelab::discrete {

namespace {

using Trips = std::vector<Eigen::Triplet<double>>;

void add_edge(Trips& trips, int i, int j, double g) {
  trips.emplace_back(i, i, g);
  trips.emplace_back(j, j, g);
  trips.emplace_back(i, j, -g);
  trips.emplace_back(j, i, -g);
}

Eigen::SparseMatrix<double> from_trips(int n, const Trips& trips) {
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  return A;
}

}  // namespace

std::vector<int> DiscreteDomain::interior_nodes() const {
  std::vector<int> idx;
  idx.reserve(num_nodes());
  for (int i = 0; i < num_nodes(); ++i)
    if (!is_boundary[i]) idx.push_back(i);
  return idx;
}

DiscreteDomain build_radial_domain(const WarpProfile& warp, int n, int N) {
  if (N < 16) throw std::invalid_argument("build_radial_domain: N >= 16 required");
  if (n < 2) throw std::invalid_argument("build_radial_domain: n >= 2 required");
  warp.validate();

  DiscreteDomain d;
  d.kind = DomainKind::Radial1D;
  d.Nt = N;
  d.t_min = 0.0;
  d.t_max = warp.r;
  d.has_pole = true;
  const double h = d.ht();
  auto w = [&](double t) { return std::pow(warp.eval_f(t), n - 1); };

  const int nn = N + 1;
  d.node_t.resize(nn);
  d.is_boundary.assign(nn, 0);
  d.layer.resize(nn);
  d.mass.resize(nn);
  for (int i = 0; i <= N; ++i) {
    d.node_t[i] = i * h;
    d.layer[i] = N - i;
  }
  d.is_boundary[N] = 1;
  d.mass[0] = w(h / 4.0) * (h / 2.0);
  for (int i = 1; i < N; ++i) d.mass[i] = w(i * h) * h;
  d.mass[N] = w(warp.r) * (h / 2.0);

  Trips kt;
  for (int i = 0; i < N; ++i) add_edge(kt, i, i + 1, w((i + 0.5) * h) / h);
  d.K = from_trips(nn, kt);

  Trips gt;
  for (int i = 1; i < N; ++i) {
    gt.emplace_back(i, i + 1, 1.0 / (2 * h));
    gt.emplace_back(i, i - 1, -1.0 / (2 * h));
  }
  d.Gt = from_trips(nn, gt);
  d.Gth.resize(nn, nn);
  return d;
}

DiscreteDomain build_interval_domain(double a, double b, int N,
                                     const std::function<double(double)>& cond,
                                     const std::function<double(double)>& massw) {
  if (N < 16) throw std::invalid_argument("build_interval_domain: N >= 16 required");
  if (!(b > a)) throw std::invalid_argument("build_interval_domain: b > a required");

  DiscreteDomain d;
  d.kind = DomainKind::Interval1D;
  d.Nt = N;
  d.t_min = a;
  d.t_max = b;
  const double h = d.ht();

  const int nn = N + 1;
  d.node_t.resize(nn);
  d.is_boundary.assign(nn, 0);
  d.layer.resize(nn);
  d.mass.resize(nn);
  for (int i = 0; i <= N; ++i) {
    d.node_t[i] = a + i * h;
    d.layer[i] = std::min(i, N - i);
  }
  d.is_boundary[0] = d.is_boundary[N] = 1;
  for (int i = 1; i < N; ++i) d.mass[i] = massw(d.node_t[i]) * h;
  d.mass[0] = massw(a) * (h / 2.0);
  d.mass[N] = massw(b) * (h / 2.0);

  Trips kt;
  for (int i = 0; i < N; ++i)
    add_edge(kt, i, i + 1, cond(a + (i + 0.5) * h) / h);
  d.K = from_trips(nn, kt);

  Trips gt;
  for (int i = 1; i < N; ++i) {
    gt.emplace_back(i, i + 1, 1.0 / (2 * h));
    gt.emplace_back(i, i - 1, -1.0 / (2 * h));
  }
  d.Gt = from_trips(nn, gt);
  d.Gth.resize(nn, nn);
  return d;
}

DiscreteDomain build_polar_domain(const WarpProfile& warp, int Nt, int Ntheta) {
  if (Nt < 16) throw std::invalid_argument("build_polar_domain: N_t >= 16 required");
  if (Ntheta < 8) throw std::invalid_argument("build_polar_domain: N_theta >= 8 required");
  warp.validate();

  DiscreteDomain d;
  d.kind = DomainKind::Polar2D;
  d.Nt = Nt;
  d.Ntheta = Ntheta;
  d.t_min = 0.0;
  d.t_max = warp.r;
  d.has_pole = true;
  const double ht = d.ht();
  const double hth = 2.0 * M_PI / Ntheta;
  auto f = [&](double t) { return warp.eval_f(t); };
  auto id = [&](int j, int k) { return 1 + (j - 1) * Ntheta + ((k % Ntheta + Ntheta) % Ntheta); };

  const int nn = 1 + Nt * Ntheta;
  d.node_t.assign(nn, 0.0);
  d.node_theta.assign(nn, 0.0);
  d.is_boundary.assign(nn, 0);
  d.layer.assign(nn, Nt);
  d.mass.resize(nn);
  d.mass[0] = f(ht / 4.0) * (ht / 2.0) * 2.0 * M_PI;
  for (int j = 1; j <= Nt; ++j)
    for (int k = 0; k < Ntheta; ++k) {
      const int i = id(j, k);
      d.node_t[i] = j * ht;
      d.node_theta[i] = k * hth;
      d.layer[i] = Nt - j;
      if (j == Nt) d.is_boundary[i] = 1;
      d.mass[i] = f(j * ht) * (j == Nt ? ht / 2.0 : ht) * hth;
    }

  Trips kt;
  for (int k = 0; k < Ntheta; ++k)
    add_edge(kt, 0, id(1, k), f(ht / 2.0) * hth / ht);
  for (int j = 1; j < Nt; ++j)
    for (int k = 0; k < Ntheta; ++k)
      add_edge(kt, id(j, k), id(j + 1, k), f((j + 0.5) * ht) * hth / ht);
  for (int j = 1; j <= Nt; ++j)
    for (int k = 0; k < Ntheta; ++k)
      add_edge(kt, id(j, k), id(j, k + 1), ht / (f(j * ht) * hth));
  d.K = from_trips(nn, kt);

  Trips gt, gth;
  for (int j = 1; j < Nt; ++j)
    for (int k = 0; k < Ntheta; ++k) {
      const int i = id(j, k);
      const int prev = (j == 1) ? 0 : id(j - 1, k);
      gt.emplace_back(i, id(j + 1, k), 1.0 / (2 * ht));
      gt.emplace_back(i, prev, -1.0 / (2 * ht));
      const double s = 1.0 / (2 * hth * f(j * ht));
      gth.emplace_back(i, id(j, k + 1), s);
      gth.emplace_back(i, id(j, k - 1), -s);
    }
  d.Gt = from_trips(nn, gt);
  d.Gth = from_trips(nn, gth);
  return d;
}

DiscreteDomain build_band_domain(double a, double b, int Nt, int Ntheta,
                                 const std::function<double(double)>& f,
                                 const std::function<double(double)>& af) {
  if (Nt < 16) throw std::invalid_argument("build_band_domain: N_t >= 16 required");
  if (Ntheta < 8) throw std::invalid_argument("build_band_domain: N_theta >= 8 required");
  if (!(b > a)) throw std::invalid_argument("build_band_domain: b > a required");

  DiscreteDomain d;
  d.kind = DomainKind::Band2D;
  d.Nt = Nt;
  d.Ntheta = Ntheta;
  d.t_min = a;
  d.t_max = b;
  const double ht = d.ht();
  const double hth = 2.0 * M_PI / Ntheta;
  auto id = [&](int j, int k) { return j * Ntheta + ((k % Ntheta + Ntheta) % Ntheta); };
  auto t_of = [&](int j) { return a + j * ht; };

  const int nn = (Nt + 1) * Ntheta;
  d.node_t.assign(nn, 0.0);
  d.node_theta.assign(nn, 0.0);
  d.is_boundary.assign(nn, 0);
  d.layer.assign(nn, 0);
  d.mass.resize(nn);
  for (int j = 0; j <= Nt; ++j)
    for (int k = 0; k < Ntheta; ++k) {
      const int i = id(j, k);
      d.node_t[i] = t_of(j);
      d.node_theta[i] = k * hth;
      d.layer[i] = std::min(j, Nt - j);
      const bool bd = (j == 0 || j == Nt);
      d.is_boundary[i] = bd;
      d.mass[i] = af(t_of(j)) * f(t_of(j)) * (bd ? ht / 2.0 : ht) * hth;
    }

  Trips kt;
  for (int j = 0; j < Nt; ++j)
    for (int k = 0; k < Ntheta; ++k) {
      const double tm = a + (j + 0.5) * ht;
      add_edge(kt, id(j, k), id(j + 1, k), (f(tm) / af(tm)) * hth / ht);
    }
  for (int j = 1; j < Nt; ++j)
    for (int k = 0; k < Ntheta; ++k)
      add_edge(kt, id(j, k), id(j, k + 1),
               (af(t_of(j)) / f(t_of(j))) * ht / hth);
  d.K = from_trips(nn, kt);

  Trips gt, gth;
  for (int j = 1; j < Nt; ++j)
    for (int k = 0; k < Ntheta; ++k) {
      const int i = id(j, k);
      const double st = 1.0 / (2 * ht * af(t_of(j)));
      gt.emplace_back(i, id(j + 1, k), st);
      gt.emplace_back(i, id(j - 1, k), -st);
      const double s = 1.0 / (2 * hth * f(t_of(j)));
      gth.emplace_back(i, id(j, k + 1), s);
      gth.emplace_back(i, id(j, k - 1), -s);
    }
  d.Gt = from_trips(nn, gt);
  d.Gth = from_trips(nn, gth);
  return d;
}

double smallest_pencil_eigenvalue(const Eigen::SparseMatrix<double>& K,
                                  const Eigen::VectorXd& m, double tol,
                                  Eigen::VectorXd* vec) {
  const int n = static_cast<int>(K.rows());
  if (n == 0 || m.size() != n)
    throw std::invalid_argument("smallest_pencil_eigenvalue: shape mismatch");
  if (!(tol > 0.0))
    throw std::invalid_argument("smallest_pencil_eigenvalue: tol > 0 required");

  // Gershgorin lower bound on the pencil spectrum -> safe SPD shift
  double lb = 0.0;
  for (int col = 0; col < n; ++col) {
    double diag = 0.0, off = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it) {
      if (it.row() == col)
        diag = it.value();
      else
        off += std::abs(it.value());
    }
    lb = std::min(lb, (diag - off) / m[col]);
  }
  const double sigma = lb - 1.0;

  Eigen::SparseMatrix<double> A = K;
  for (int i = 0; i < n; ++i) A.coeffRef(i, i) -= sigma * m[i];
  A.makeCompressed();
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("smallest_pencil_eigenvalue: factorization failed");

  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double theta = 0.0;
  for (int iter = 0; iter < 1000; ++iter) {
    Eigen::VectorXd y = solver.solve(m.asDiagonal() * x);
    y /= y.cwiseAbs().maxCoeff();
    const Eigen::VectorXd Ky = K * y;
    const Eigen::VectorXd My = m.asDiagonal() * y;
    theta = y.dot(Ky) / y.dot(My);
    // |K| |y| for the componentwise backward-error floor: at nodes with tiny
    // quadrature mass (the pole cell) the plain residual divided by m_i
    // amplifies round-off and can never reach a tight tol
    Eigen::VectorXd scale = (std::abs(theta) * m.cwiseAbs()).cwiseProduct(y.cwiseAbs());
    for (int col = 0; col < n; ++col)
      for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it)
        scale[it.row()] += std::abs(it.value()) * std::abs(y[col]);
    double res = 0.0, backward = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ri = std::abs(Ky[i] - theta * My[i]);
      res = std::max(res, ri / m[i]);
      backward = std::max(backward, ri / (scale[i] + 1e-300));
    }
    x = y;
    if (res < tol * std::max(1.0, std::abs(theta)) || backward < 1e-14) {
      if (x.sum() < 0) x = -x;
      x /= x.maxCoeff();
      if (vec) *vec = x;
      return theta;
    }
  }
  throw std::runtime_error(
      "smallest_pencil_eigenvalue: inverse iteration did not converge");
}

InteriorSystem interior_system(const DiscreteDomain& domain) {
  InteriorSystem sys;
  sys.idx = domain.interior_nodes();
  const int ni = static_cast<int>(sys.idx.size());
  std::vector<int> where(domain.num_nodes(), -1);
  for (int a = 0; a < ni; ++a) where[sys.idx[a]] = a;

  Trips kt;
  for (int col = 0; col < domain.K.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(domain.K, col); it; ++it)
      if (where[it.row()] >= 0 && where[it.col()] >= 0)
        kt.emplace_back(where[it.row()], where[it.col()], it.value());
  sys.K = from_trips(ni, kt);
  sys.m.resize(ni);
  for (int a = 0; a < ni; ++a) sys.m[a] = domain.mass[sys.idx[a]];
  return sys;
}

std::pair<double, Eigen::VectorXd> smallest_eigenpair(
    const DiscreteDomain& domain, double tol) {
  const InteriorSystem sys = interior_system(domain);
  const int ni = static_cast<int>(sys.idx.size());

  Eigen::VectorXd vi;
  const double lambda = smallest_pencil_eigenvalue(sys.K, sys.m, tol, &vi);
  for (int a = 0; a < ni; ++a)
    if (!(vi[a] > 0.0))
      throw std::runtime_error("smallest_eigenpair: ground mode not positive");

  Eigen::VectorXd u = Eigen::VectorXd::Zero(domain.num_nodes());
  for (int a = 0; a < ni; ++a) u[sys.idx[a]] = vi[a];
  return {lambda, u};
}

double rayleigh_quotient(const DiscreteDomain& domain,
                         const Eigen::VectorXd& u) {
  if (u.size() != domain.num_nodes())
    throw std::invalid_argument("rayleigh_quotient: field size mismatch");
  for (int i = 0; i < domain.num_nodes(); ++i)
    if (domain.is_boundary[i] && u[i] != 0.0)
      throw std::invalid_argument("rayleigh_quotient: u must vanish on the boundary");
  const double den = u.dot(domain.mass.asDiagonal() * u);
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero field");
  return u.dot(domain.K * u) / den;
}

VectorField grad(const DiscreteDomain& domain, const Eigen::VectorXd& u) {
  if (u.size() != domain.num_nodes())
    throw std::invalid_argument("grad: field size mismatch");
  VectorField X;
  X.t = domain.Gt * u;
  if (domain.kind == DomainKind::Polar2D || domain.kind == DomainKind::Band2D)
    X.theta = domain.Gth * u;
  return X;
}

Eigen::VectorXd divergence(const DiscreteDomain& domain, const VectorField& X) {
  if (X.t.size() != domain.num_nodes())
    throw std::invalid_argument("divergence: field size mismatch");
  Eigen::VectorXd acc =
      domain.Gt.transpose() * (domain.mass.cwiseProduct(X.t));
  if (X.theta.size() > 0)
    acc += domain.Gth.transpose() * (domain.mass.cwiseProduct(X.theta));
  return -acc.cwiseQuotient(domain.mass);
}

VectorField grad_log(const DiscreteDomain& domain, const Eigen::VectorXd& u) {
  for (int i = 0; i < domain.num_nodes(); ++i)
    if (!domain.is_boundary[i] && !(u[i] > 0.0))
      throw std::invalid_argument("grad_log: u must be positive at interior nodes");
  VectorField X = grad(domain, u);
  for (int i = 0; i < domain.num_nodes(); ++i) {
    const double denom = (domain.is_boundary[i] || u[i] <= 0.0) ? 1.0 : u[i];
    X.t[i] /= denom;
    if (X.theta.size() > 0) X.theta[i] /= denom;
  }
  return X;
}

Eigen::VectorXd minus_laplacian(const DiscreteDomain& domain,
                                const Eigen::VectorXd& u) {
  if (u.size() != domain.num_nodes())
    throw std::invalid_argument("minus_laplacian: field size mismatch");
  return (domain.K * u).cwiseQuotient(domain.mass);
}

}  // namespace tonelab::discrete
