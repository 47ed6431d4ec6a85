#pragma once

#include <Eigen/Dense>
#include <string>

#include "tonelab/discrete_domain.hpp"

// Two-sided test-function bound and the vector-field lower bound on the
// first Dirichlet eigenvalue, with the equality certificate X0 = -grad log v.
namespace tonelab::tone_bounds {

struct BoundReport {
  std::string source;          // "Barta" | "VectorField" | "McKean"
  double lower = 0.0;
  double upper = 0.0;          // +inf when unbounded/capped
  double lambda1 = 0.0;        // reference eigenvalue
  double margin_lower = 0.0;   // lambda1 - lower
  double margin_upper = 0.0;   // upper - lambda1 (inf allowed)
  bool pass = false;           // lower <= lambda1 <= upper
};

// lower = min over interior nodes of (-Lf)/f, upper = max (reported as +inf
// above upper_cap). Requires f > 0 at interior nodes, f = 0 on the boundary.
// lambda1_ref: the domain's computed eigenvalue used for the verdict.
BoundReport barta_bounds(const discrete::DiscreteDomain& domain,
                         const Eigen::VectorXd& f, double lambda1_ref,
                         double upper_cap = 1e8);

// lower = min over interior nodes at distance > boundary_layer cells of
// (div X - |X|^2). The layer exclusion compensates for the gradient stencil
// losing consistency at the last interior cell. For the optimal field the
// discrete lower bound can overshoot lambda1 by O(h^2), so the verdict
// allows a relative slack of `slack` (the margin is still reported exactly).
BoundReport vfield_lower_bound(const discrete::DiscreteDomain& domain,
                               const discrete::VectorField& X,
                               double lambda1_ref, int boundary_layer = 1,
                               double slack = 1e-3);

// X0 = -grad log v with v the ground eigenvector; feeding it back to
// vfield_lower_bound certifies the eigenvalue from below within
// discretization error.
discrete::VectorField optimal_vfield(const discrete::DiscreteDomain& domain,
                                     double eig_tol = 1e-12);

// lambda1 of the hyperbolic ball (c = -1) against the asymptote (n-1)^2/4;
// pass means the strict inequality lambda1 > (n-1)^2/4 holds.
BoundReport mckean_report(int n, double r, double tol = 1e-10, int N = 4096);

}  // namespace tonelab::tone_bounds
