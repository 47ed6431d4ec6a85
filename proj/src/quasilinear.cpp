#include "tonelab/quasilinear.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tonelab::ql {

Gate solvability_gate(const discrete::DiscreteDomain& domain,
                      const Eigen::VectorXd& F, double lambda1, double tol) {
  if (F.size() != domain.num_nodes())
    throw std::invalid_argument("solvability_gate: field size mismatch");
  double sup = -std::numeric_limits<double>::infinity();
  double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < domain.num_nodes(); ++i) {
    if (domain.is_boundary[i]) continue;
    sup = std::max(sup, F[i]);
    inf = std::min(inf, F[i]);
  }
  if (sup < lambda1 - tol) return Gate::Solvable;
  if (inf >= lambda1 + tol) return Gate::NoSolutionCertificate;
  return Gate::Indeterminate;
}

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::Solvable: return "Solvable";
    case Gate::NoSolutionCertificate: return "NoSolutionCertificate";
    default: return "Indeterminate";
  }
}

QLSolution solve_dirichlet(const discrete::DiscreteDomain& domain,
                           const Eigen::VectorXd& F, const Eigen::VectorXd& psi,
                           double lambda1, double tol) {
  if (psi.size() != domain.num_nodes())
    throw std::invalid_argument("solve_dirichlet: psi size mismatch");
  if (solvability_gate(domain, F, lambda1, tol) != Gate::Solvable)
    throw std::invalid_argument(
        "solve_dirichlet: sup F < lambda1 required (gate not Solvable)");

  const auto sys = discrete::interior_system(domain);
  const int ni = static_cast<int>(sys.idx.size());
  const int nn = domain.num_nodes();

  // harmonic extension v of e^{-psi}: K_II v_I = -K_IB e^{-psi_B}
  Eigen::VectorXd vfull = Eigen::VectorXd::Zero(nn);
  for (int i = 0; i < nn; ++i)
    if (domain.is_boundary[i]) vfull[i] = std::exp(-psi[i]);
  const Eigen::VectorXd flux = domain.K * vfull;
  Eigen::VectorXd rhs(ni);
  for (int a = 0; a < ni; ++a) rhs[a] = -flux[sys.idx[a]];

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> harm(sys.K);
  if (harm.info() != Eigen::Success)
    throw std::runtime_error("solve_dirichlet: stiffness factorization failed");
  const Eigen::VectorXd vI = harm.solve(rhs);

  // (-Laplacian - F) h = F v with zero boundary data
  Eigen::SparseMatrix<double> A = sys.K;
  Eigen::VectorXd FI(ni), bI(ni);
  for (int a = 0; a < ni; ++a) {
    FI[a] = F[sys.idx[a]];
    A.coeffRef(a, a) -= sys.m[a] * FI[a];
    bI[a] = sys.m[a] * FI[a] * vI[a];
  }
  A.makeCompressed();
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> lin(A);
  if (lin.info() != Eigen::Success)
    throw std::runtime_error("solve_dirichlet: linear operator factorization failed");
  const Eigen::VectorXd hI = lin.solve(bI);

  QLSolution sol;
  sol.f = vfull;
  for (int a = 0; a < ni; ++a) sol.f[sys.idx[a]] = vI[a] + hI[a];
  sol.u.resize(nn);
  sol.status = "ok";
  for (int i = 0; i < nn; ++i) {
    if (domain.is_boundary[i]) {
      sol.u[i] = psi[i];
    } else if (sol.f[i] > 0.0) {
      sol.u[i] = -std::log(sol.f[i]);
    } else {
      sol.status = "PositivityFailure";
      sol.u[i] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  sol.residual = (sol.status == "ok")
                     ? residual(domain, sol.u, F)
                     : std::numeric_limits<double>::infinity();
  return sol;
}

QLSolution blowup_solution(const discrete::DiscreteDomain& domain,
                           double eig_tol) {
  const auto [lambda, phi] = discrete::smallest_eigenpair(domain, eig_tol);
  const int nn = domain.num_nodes();
  QLSolution sol;
  sol.status = "ok";
  sol.f = phi;
  sol.u.resize(nn);
  for (int i = 0; i < nn; ++i)
    sol.u[i] = domain.is_boundary[i]
                   ? std::numeric_limits<double>::infinity()
                   : -std::log(phi[i]);
  const Eigen::VectorXd F = Eigen::VectorXd::Constant(nn, lambda);
  sol.residual = residual(domain, sol.u, F, 1);
  return sol;
}

double residual(const discrete::DiscreteDomain& domain, const Eigen::VectorXd& u,
                const Eigen::VectorXd& F, int min_layer) {
  if (u.size() != domain.num_nodes() || F.size() != domain.num_nodes())
    throw std::invalid_argument("residual: field size mismatch");
  const Eigen::VectorXd lap = -discrete::minus_laplacian(domain, u);
  const discrete::VectorField g = discrete::grad(domain, u);
  double worst = 0.0;
  for (int i = 0; i < domain.num_nodes(); ++i) {
    if (domain.is_boundary[i] || domain.layer[i] <= min_layer) continue;
    double g2 = g.t[i] * g.t[i];
    if (g.theta.size() > 0) g2 += g.theta[i] * g.theta[i];
    worst = std::max(worst, std::abs(lap[i] - g2 - F[i]));
  }
  return worst;
}

}  // namespace tonelab::ql
