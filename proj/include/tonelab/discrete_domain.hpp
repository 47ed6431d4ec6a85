#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <utility>
#include <vector>

#include "tonelab/warp.hpp"

// Discrete Laplacians, gradients, divergences, quadrature, Rayleigh
// quotients, and smallest-eigenpair extraction on 1-D weighted grids and
// 2-D polar grids.
//
// Discretization is finite-volume in divergence form: the stiffness matrix K
// is assembled from edge conductances and the mass vector m from per-cell
// quadrature, so K is symmetric positive semidefinite and -Laplacian(u) at an
// interior node is (K u)_i / m_i.
namespace tonelab::discrete {

enum class DomainKind { Radial1D, Interval1D, Polar2D, Band2D };

// Vector fields store components in the orthonormal frame (dt, f^{-1} dtheta);
// theta has size 0 on 1-D domains.
struct VectorField {
  Eigen::VectorXd t, theta;
};

struct DiscreteDomain {
  DomainKind kind = DomainKind::Radial1D;
  int Nt = 0, Ntheta = 0;  // Ntheta = 0 for 1-D kinds
  double t_min = 0.0, t_max = 0.0;
  bool has_pole = false;

  std::vector<double> node_t, node_theta;  // node_theta empty for 1-D
  std::vector<char> is_boundary;           // Dirichlet nodes
  std::vector<int> layer;                  // graph distance (cells) to boundary
  Eigen::VectorXd mass;                    // quadrature weights per node
  Eigen::SparseMatrix<double> K;           // full-node stiffness
  Eigen::SparseMatrix<double> Gt, Gth;     // central-difference gradient rows
                                           // (zero at boundary and pole nodes)

  int num_nodes() const { return static_cast<int>(node_t.size()); }
  double ht() const { return (t_max - t_min) / Nt; }
  std::vector<int> interior_nodes() const;
};

// Ball of radius warp.r with volume density f^{n-1}: pole node at t = 0
// (symmetry), Dirichlet at t = r. N is the number of cells. Rejects N < 16.
DiscreteDomain build_radial_domain(const WarpProfile& warp, int n, int N);

// Full polar disk for the metric dt^2 + f(t)^2 dtheta^2: single shared pole
// node, Dirichlet at t = r, periodic theta. Rejects N_theta < 8.
DiscreteDomain build_polar_domain(const WarpProfile& warp, int Nt, int Ntheta);

// Sturm-Liouville interval (a, b) with Dirichlet ends: energy
// integral cond(t) u'(t)^2, mass integral massw(t) u(t)^2.
DiscreteDomain build_interval_domain(
    double a, double b, int N, const std::function<double(double)>& cond,
    const std::function<double(double)>& massw);

// Annular band t in (a, b), periodic theta, Dirichlet at both radial ends,
// metric af(t)^2 dt^2 + f(t)^2 dtheta^2 (af = 1 gives the standard warped
// band; af = f gives a conformal metric).
DiscreteDomain build_band_domain(double a, double b, int Nt, int Ntheta,
                                 const std::function<double(double)>& f,
                                 const std::function<double(double)>& af);

// Stiffness and mass restricted to the interior (non-Dirichlet) nodes;
// idx maps restricted positions back to full-node indices.
struct InteriorSystem {
  Eigen::SparseMatrix<double> K;
  Eigen::VectorXd m;
  std::vector<int> idx;
};
InteriorSystem interior_system(const DiscreteDomain& domain);

// Smallest eigenvalue of the pencil K u = lambda diag(m) u restricted to the
// given index set (SPD or shifted internally if indefinite). Returns lambda;
// the eigenvector (on the restricted indices) goes to *vec if non-null.
double smallest_pencil_eigenvalue(const Eigen::SparseMatrix<double>& K,
                                  const Eigen::VectorXd& m, double tol,
                                  Eigen::VectorXd* vec = nullptr);

// Smallest Dirichlet eigenpair of -Laplacian. u is a full-node field: zero on
// boundary nodes, positive at interior nodes, normalized max u = 1.
std::pair<double, Eigen::VectorXd> smallest_eigenpair(
    const DiscreteDomain& domain, double tol);

// Dirichlet energy over mass norm, u^T K u / u^T M u; requires u = 0 on
// boundary nodes and u != 0. Reproduces the eigenvalue exactly on a discrete
// eigenvector.
double rayleigh_quotient(const DiscreteDomain& domain,
                         const Eigen::VectorXd& u);

// Central-difference gradient in the orthonormal frame; zero rows at
// boundary and pole nodes.
VectorField grad(const DiscreteDomain& domain, const Eigen::VectorXd& u);

// Negative adjoint of grad in the mass-weighted inner product (discrete
// summation by parts, exact by construction).
Eigen::VectorXd divergence(const DiscreteDomain& domain, const VectorField& X);

// grad(u)/u evaluated as a pointwise quotient; requires u > 0 at interior
// nodes (throws std::invalid_argument otherwise).
VectorField grad_log(const DiscreteDomain& domain, const Eigen::VectorXd& u);

// (K u)_i / m_i at every node (meaningful at interior nodes).
Eigen::VectorXd minus_laplacian(const DiscreteDomain& domain,
                                const Eigen::VectorXd& u);

}  // namespace tonelab::discrete
