#pragma once

#include <Eigen/Dense>
#include <string>

#include "tonelab/discrete_domain.hpp"

// Solver and solvability gate for the quasilinear Dirichlet problem
//   Laplacian(u) - |grad u|^2 = F,   u = psi on the boundary,
// via the substitution f = e^{-u}, which turns it into the linear problem
// (-Laplacian - F) h = F v with v the harmonic extension of e^{-psi}.
namespace tonelab::ql {

enum class Gate { Solvable, NoSolutionCertificate, Indeterminate };

struct QLSolution {
  Eigen::VectorXd u;   // full-node field (boundary = psi; +inf for blow-up)
  Eigen::VectorXd f;   // f = e^{-u} > 0 at interior nodes when status is ok
  double residual = 0.0;  // max interior quasilinear defect
  std::string status;     // "ok" | "PositivityFailure"
};

// Solvable if sup F < lambda1 - tol; NoSolutionCertificate if
// inf F >= lambda1 + tol; Indeterminate otherwise. F is sampled on interior
// nodes (full-node vectors are accepted; boundary entries ignored).
Gate solvability_gate(const discrete::DiscreteDomain& domain,
                      const Eigen::VectorXd& F, double lambda1,
                      double tol = 1e-9);
std::string gate_name(Gate g);

// Requires the gate to hold (sup F < lambda1). psi is a full-node vector;
// only its boundary entries are used. Throws std::invalid_argument when the
// gate fails; a non-positive f is reported via status, never hidden.
QLSolution solve_dirichlet(const discrete::DiscreteDomain& domain,
                           const Eigen::VectorXd& F, const Eigen::VectorXd& psi,
                           double lambda1, double tol = 1e-9);

// u = -log(phi1) with phi1 the max-normalized ground eigenvector: the
// boundary blow-up solution with F = lambda1. residual is the defect against
// lambda1 at interior nodes more than one cell from the boundary.
QLSolution blowup_solution(const discrete::DiscreteDomain& domain,
                           double eig_tol = 1e-12);

// max over interior nodes of |Laplacian_h u - |grad_h u|^2 - F|; nodes within
// min_layer cells of the boundary are excluded (0 = all interior nodes).
double residual(const discrete::DiscreteDomain& domain, const Eigen::VectorXd& u,
                const Eigen::VectorXd& F, int min_layer = 0);

}  // namespace tonelab::ql
