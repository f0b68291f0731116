#include "l1vic/forward_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "l1vic/regularization.hpp"
#include "l1vic/sym_tridiag.hpp"

namespace l1vic
{

void NewtonConfig::validate() const
{
   if (max_iter < 1) { throw std::invalid_argument("NewtonConfig: max_iter >= 1"); }
   if (!(damping > 0.0 && damping < 1.0))
   {
      throw std::invalid_argument("NewtonConfig: damping in (0,1)");
   }
   if (max_backtracks < 0)
   {
      throw std::invalid_argument("NewtonConfig: max_backtracks >= 0");
   }
}

double NewtonConfig::effective_tol(double load_inf_norm) const
{
   if (abs_tol > 0.0) { return abs_tol; }
   return 1e-11 * (1.0 + load_inf_norm);
}

namespace
{

double inf_norm(const std::vector<double>& v)
{
   double m = 0.0;
   for (double x : v) { m = std::max(m, std::abs(x)); }
   return m;
}

} // namespace

StateSolve solve_state_with_load(std::shared_ptr<const Mesh> mesh,
                                 std::vector<double> load, double gamma,
                                 const NewtonConfig& cfg,
                                 const GridFunction* initial)
{
   cfg.validate();
   if (!(gamma > 0.0)) { throw std::invalid_argument("solve_state: gamma > 0"); }

   const int m = mesh->n_interior();
   const double tol = cfg.effective_tol(inf_norm(load));
   const SymTridiag stiffness = assemble_stiffness(*mesh);

   GridFunction y = initial ? *initial : GridFunction(mesh);
   if (initial && !initial->boundary_is_zero())
   {
      throw std::invalid_argument("solve_state: initial guess must vanish on the boundary");
   }

   const auto residual = [&](const GridFunction& cand)
   {
      std::vector<double> r = stiffness.apply(cand.interior());
      const std::vector<double> reg = load_vector_composed(
         cand, [gamma](double s) { return smoothed_sign(s, gamma); });
      for (int i = 0; i < m; ++i) { r[i] += reg[i] - load[i]; }
      return r;
   };

   NewtonReport report;
   std::vector<double> r = residual(y);
   double rnorm = inf_norm(r);

   while (rnorm > tol)
   {
      if (report.iterations >= cfg.max_iter)
      {
         report.final_residual = rnorm;
         throw NonConvergenceError("solve_state: no convergence in " +
                                      std::to_string(cfg.max_iter) + " iterations",
                                   report, gamma);
      }

      SymTridiag jac = stiffness;
      jac.add_scaled(
         assemble_weighted_mass(*mesh, [&](double x)
                                { return smoothed_sign_d1(y.value(x), gamma); }),
         1.0);
      std::vector<double> step = SymTridiagFactor(jac).solve(r);

      // Step control: plain Newton traverses the saturation transient of
      // this monotone problem even though the residual norm is not
      // monotone along it, so the full step is kept unless it blows the
      // residual up by more than kTransientGrowth. Only then a monotone
      // backtracking search takes over.
      constexpr double kTransientGrowth = 10.0;
      double s = 1.0;
      GridFunction trial = y;
      std::vector<double> r_trial;
      double rnorm_trial = std::numeric_limits<double>::infinity();
      for (int bt = 0;; ++bt)
      {
         for (int i = 0; i < m; ++i) { trial[i + 1] = y[i + 1] - s * step[i]; }
         r_trial = residual(trial);
         rnorm_trial = inf_norm(r_trial);
         if (bt == 0 && rnorm_trial <= kTransientGrowth * rnorm &&
             std::isfinite(rnorm_trial))
         {
            if (rnorm_trial > rnorm) { ++report.nonmonotone_steps; }
            break;
         }
         if (rnorm_trial < rnorm || rnorm_trial <= tol)
         {
            report.backtrack_total += bt;
            break;
         }
         if (bt >= cfg.max_backtracks)
         {
            report.final_residual = rnorm;
            report.backtrack_total += bt;
            throw NonConvergenceError(
               "solve_state: backtracking stalled at residual " +
                  std::to_string(rnorm) + ", gamma = " + std::to_string(gamma),
               report, gamma);
         }
         s *= cfg.damping;
      }
      ++report.iterations;
      y = trial;
      r = std::move(r_trial);
      rnorm = rnorm_trial;
   }

   report.final_residual = rnorm;
   report.converged = true;
   return {std::move(y), report};
}

StateSolve solve_state(std::shared_ptr<const Mesh> mesh, const Coefficient& u,
                       double gamma, const NewtonConfig& cfg,
                       const GridFunction* initial)
{
   return solve_state_with_load(mesh, load_vector(*mesh, u), gamma, cfg, initial);
}

StateSolve solve_state(const GridFunction& u, double gamma,
                       const NewtonConfig& cfg, const GridFunction* initial)
{
   return solve_state_with_load(u.mesh_ptr(), mass_apply(u), gamma, cfg, initial);
}

} // namespace l1vic
