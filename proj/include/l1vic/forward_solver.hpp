#ifndef L1VIC_FORWARD_SOLVER_HPP
#define L1VIC_FORWARD_SOLVER_HPP

#include <memory>

#include "assembly.hpp"
#include "errors.hpp"
#include "grid_function.hpp"

namespace l1vic
{

struct NewtonConfig
{
   /// Residual tolerance in the max norm. Non-positive means automatic:
   /// 1e-11 * (1 + max-norm of the load vector), far below the smallest
   /// discretization error of interest.
   double abs_tol = 0.0;
   int max_iter = 200;
   /// Backtracking contraction factor in (0, 1).
   double damping = 0.5;
   int max_backtracks = 30;

   void validate() const;
   double effective_tol(double load_inf_norm) const;
};

struct StateSolve
{
   GridFunction y;
   NewtonReport report;
};

/// Solves the regularized state problem on the interior P1 space:
/// find y with  a(y, v) + (smoothed_sign(y; gamma), v) = (u, v)  for all v.
///
/// Plain Newton with monotone residual backtracking; each step solves
/// (A + W(y)) d = -r with W the weighted mass of smoothed_sign_d1(y).
/// The initial iterate defaults to zero; pass `initial` to warm start.
/// Throws NonConvergenceError / LinearSolveError on failure.
StateSolve solve_state(std::shared_ptr<const Mesh> mesh, const Coefficient& u,
                       double gamma, const NewtonConfig& cfg = {},
                       const GridFunction* initial = nullptr);

/// Same problem with a P1 control; the right side uses the exact mass
/// pairing instead of quadrature.
StateSolve solve_state(const GridFunction& u, double gamma,
                       const NewtonConfig& cfg = {},
                       const GridFunction* initial = nullptr);

/// Shared Newton core: residual r(y) = A y + (smoothed_sign(y), phi) - load.
StateSolve solve_state_with_load(std::shared_ptr<const Mesh> mesh,
                                 std::vector<double> load, double gamma,
                                 const NewtonConfig& cfg,
                                 const GridFunction* initial);

} // namespace l1vic

#endif
