#ifndef L1VIC_KKT_SOLVER_HPP
#define L1VIC_KKT_SOLVER_HPP

#include <memory>
#include <vector>

#include "exact_solution.hpp"
#include "forward_solver.hpp"

namespace l1vic
{

/// Data of the tracking objective
///   1/2 ||y - desired_state||^2 + nu/2 ||u - desired_control||^2.
struct ProblemData
{
   Coefficient desired_state;
   Coefficient desired_control;
   double nu = 1.0;
};

/// The data functions under which the closed-form solution is stationary.
ProblemData exact_problem_data(const ExactSolution& exact);

/// Geometric schedule gamma0, gamma0*factor, ..., capped so the final
/// entry is exactly gamma_max.
struct ContinuationSchedule
{
   double gamma0 = 1.0;
   double factor = 1.5;
   double gamma_max = 1e20;

   std::vector<double> gammas() const;
};

/// One solution of the first-order system at fixed gamma. The control is
/// eliminated through the gradient equation and reconstructed nodally as
/// u = desired_control - p/nu.
struct KktState
{
   GridFunction y;
   GridFunction p;
   GridFunction u;
   double gamma = 0.0;
   NewtonReport report;
};

/// Full Newton in (y, p) on the coupled residual
///   R1 = A y + (smoothed_sign(y), phi) - (u_d - p/nu, phi)
///   R2 = A p + W(y) p - (y - y_d, phi)
/// with W the weighted mass of smoothed_sign_d1(y). The Jacobian carries
/// the second-derivative coupling block d/dy [W(y) p]; if backtracking
/// stalls, one retry drops that block (recorded in report.fallback_steps).
KktState solve_kkt_fixed_gamma(const ProblemData& data, double gamma,
                               std::shared_ptr<const Mesh> mesh,
                               const NewtonConfig& cfg = {},
                               const KktState* warm = nullptr);

struct GammaStep
{
   double gamma = 0.0;
   int iterations = 0;
   double final_residual = 0.0;
   int backtracks = 0;
   int fallbacks = 0;
   bool bisected = false;
};

struct ContinuationResult
{
   KktState state;
   std::vector<GammaStep> steps;
};

/// Runs solve_kkt_fixed_gamma along the schedule, warm-starting each step
/// from the previous solution (first step from zero). If a step fails, one
/// intermediate gamma at the geometric mean is tried before giving up.
ContinuationResult solve_kkt_continuation(const ProblemData& data,
                                          const ContinuationSchedule& schedule,
                                          std::shared_ptr<const Mesh> mesh,
                                          const NewtonConfig& cfg = {});

} // namespace l1vic

#endif
