#include "l1vic/kkt_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "l1vic/band_matrix.hpp"
#include "l1vic/regularization.hpp"
#include "l1vic/sym_tridiag.hpp"

namespace l1vic
{

ProblemData exact_problem_data(const ExactSolution& exact)
{
   return {[exact](double x) { return exact.desired_state(x); },
           [exact](double x) { return exact.desired_control(x); },
           exact.params().nu};
}

std::vector<double> ContinuationSchedule::gammas() const
{
   if (!(gamma0 > 0.0) || !(factor > 1.0) || !(gamma_max >= gamma0))
   {
      throw std::invalid_argument(
         "ContinuationSchedule: need gamma0 > 0, factor > 1, gamma_max >= gamma0");
   }
   std::vector<double> g;
   for (double v = gamma0; v < gamma_max; v *= factor) { g.push_back(v); }
   if (g.empty() || g.back() != gamma_max) { g.push_back(gamma_max); }
   return g;
}

namespace
{

double inf_norm(const std::vector<double>& v)
{
   double m = 0.0;
   for (double x : v) { m = std::max(m, std::abs(x)); }
   return m;
}

// Mesh-dependent pieces that do not change along a continuation run.
struct KktWorkspace
{
   std::shared_ptr<const Mesh> mesh;
   SymTridiag stiffness;
   SymTridiag mass;
   std::vector<double> load_ud;
   std::vector<double> load_yd;
   double nu;

   KktWorkspace(const ProblemData& data, std::shared_ptr<const Mesh> m)
      : mesh(std::move(m)), stiffness(assemble_stiffness(*mesh)),
        mass(assemble_mass(*mesh)),
        load_ud(load_vector(*mesh, data.desired_control)),
        load_yd(load_vector(*mesh, data.desired_state)), nu(data.nu)
   {
      if (!(nu > 0.0)) { throw std::invalid_argument("ProblemData: nu > 0 required"); }
      for (double v : load_ud)
      {
         if (!std::isfinite(v))
         {
            throw std::invalid_argument("ProblemData: desired_control not finite");
         }
      }
      for (double v : load_yd)
      {
         if (!std::isfinite(v))
         {
            throw std::invalid_argument("ProblemData: desired_state not finite");
         }
      }
   }

   double load_scale() const
   {
      return std::max(inf_norm(load_ud), inf_norm(load_yd));
   }
};

// Combined residual, node-interleaved: entry 2k is the state equation at
// interior node k, entry 2k+1 the adjoint equation.
std::vector<double> kkt_residual(const KktWorkspace& ws, double gamma,
                                 const GridFunction& y, const GridFunction& p)
{
   const int m = ws.mesh->n_interior();
   const std::vector<double> ay = ws.stiffness.apply(y.interior());
   const std::vector<double> ap = ws.stiffness.apply(p.interior());
   const std::vector<double> my = mass_apply(y);
   const std::vector<double> mp = mass_apply(p);
   const std::vector<double> reg = load_vector_composed(
      y, [gamma](double s) { return smoothed_sign(s, gamma); });
   const std::vector<double> wp = load_vector_composed_pair(
      y, p, [gamma](double s) { return smoothed_sign_d1(s, gamma); });

   std::vector<double> r(2 * m);
   for (int k = 0; k < m; ++k)
   {
      r[2 * k] = ay[k] + reg[k] - ws.load_ud[k] + mp[k] / ws.nu;
      r[2 * k + 1] = ap[k] + wp[k] - my[k] + ws.load_yd[k];
   }
   return r;
}

// Interleaved band Jacobian
//   [ A + W(y)      M/nu     ]
//   [ -M + D(y,p)   A + W(y) ]
// with W the weighted mass of smoothed_sign_d1(y) and D the weighted mass
// of smoothed_sign_d2(y) * p (dropped in the fallback variant).
BandMatrix kkt_jacobian(const KktWorkspace& ws, double gamma,
                        const GridFunction& y, const GridFunction& p,
                        bool with_coupling)
{
   const int m = ws.mesh->n_interior();
   const SymTridiag w = assemble_weighted_mass(
      *ws.mesh, [&](double x) { return smoothed_sign_d1(y.value(x), gamma); });
   SymTridiag j21(m);
   j21.add_scaled(ws.mass, -1.0);
   if (with_coupling)
   {
      j21.add_scaled(assemble_weighted_mass(*ws.mesh,
                                            [&](double x) {
                                               return smoothed_sign_d2(
                                                         y.value(x), gamma) *
                                                      p.value(x);
                                            }),
                     1.0);
   }

   BandMatrix jac(2 * m, 3, 3);
   for (int k = 0; k < m; ++k)
   {
      const double a_diag = ws.stiffness.diag(k) + w.diag(k);
      jac.at(2 * k, 2 * k) = a_diag;
      jac.at(2 * k + 1, 2 * k + 1) = a_diag;
      jac.at(2 * k, 2 * k + 1) = ws.mass.diag(k) / ws.nu;
      jac.at(2 * k + 1, 2 * k) = j21.diag(k);
      if (k + 1 < m)
      {
         const double a_off = ws.stiffness.off(k) + w.off(k);
         jac.at(2 * k, 2 * k + 2) = a_off;
         jac.at(2 * k + 2, 2 * k) = a_off;
         jac.at(2 * k + 1, 2 * k + 3) = a_off;
         jac.at(2 * k + 3, 2 * k + 1) = a_off;
         jac.at(2 * k, 2 * k + 3) = ws.mass.off(k) / ws.nu;
         jac.at(2 * k + 2, 2 * k + 1) = ws.mass.off(k) / ws.nu;
         jac.at(2 * k + 1, 2 * k + 2) = j21.off(k);
         jac.at(2 * k + 3, 2 * k) = j21.off(k);
      }
   }
   return jac;
}

GridFunction reconstruct_control(const KktWorkspace& ws, const ProblemData& data,
                                 const GridFunction& p)
{
   GridFunction u(ws.mesh);
   for (int i = 0; i < u.size(); ++i)
   {
      u[i] = data.desired_control(ws.mesh->node(i)) - p[i] / ws.nu;
   }
   return u;
}

KktState solve_kkt_core(const KktWorkspace& ws, const ProblemData& data,
                        double gamma, const NewtonConfig& cfg,
                        const KktState* warm)
{
   cfg.validate();
   if (!(gamma > 0.0))
   {
      throw std::invalid_argument("solve_kkt_fixed_gamma: gamma > 0");
   }
   const int m = ws.mesh->n_interior();
   const double tol = cfg.effective_tol(ws.load_scale());

   GridFunction y = warm ? warm->y : GridFunction(ws.mesh);
   GridFunction p = warm ? warm->p : GridFunction(ws.mesh);

   NewtonReport report;
   std::vector<double> r = kkt_residual(ws, gamma, y, p);
   double rnorm = inf_norm(r);

   while (rnorm > tol)
   {
      if (report.iterations >= cfg.max_iter)
      {
         report.final_residual = rnorm;
         throw NonConvergenceError("solve_kkt_fixed_gamma: no convergence in " +
                                      std::to_string(cfg.max_iter) +
                                      " iterations at gamma = " +
                                      std::to_string(gamma),
                                   report, gamma);
      }

      bool accepted = false;
      for (int attempt = 0; attempt < 2 && !accepted; ++attempt)
      {
         const bool with_coupling = (attempt == 0);
         BandMatrix jac = kkt_jacobian(ws, gamma, y, p, with_coupling);
         jac.lu_factor();
         std::vector<double> step = r;
         jac.solve_in_place(step);

         double s = 1.0;
         GridFunction y_trial = y, p_trial = p;
         for (int bt = 0; bt <= cfg.max_backtracks; ++bt)
         {
            for (int k = 0; k < m; ++k)
            {
               y_trial[k + 1] = y[k + 1] - s * step[2 * k];
               p_trial[k + 1] = p[k + 1] - s * step[2 * k + 1];
            }
            std::vector<double> r_trial = kkt_residual(ws, gamma, y_trial, p_trial);
            const double rnorm_trial = inf_norm(r_trial);
            if (rnorm_trial < rnorm || rnorm_trial <= tol)
            {
               report.backtrack_total += bt;
               if (!with_coupling) { ++report.fallback_steps; }
               y = y_trial;
               p = p_trial;
               r = std::move(r_trial);
               rnorm = rnorm_trial;
               accepted = true;
               break;
            }
            s *= cfg.damping;
         }
      }
      if (!accepted)
      {
         report.final_residual = rnorm;
         throw NonConvergenceError(
            "solve_kkt_fixed_gamma: backtracking stalled at residual " +
               std::to_string(rnorm) + ", gamma = " + std::to_string(gamma),
            report, gamma);
      }
      ++report.iterations;
   }

   report.final_residual = rnorm;
   report.converged = true;
   GridFunction u = reconstruct_control(ws, data, p);
   return {std::move(y), std::move(p), std::move(u), gamma, report};
}

} // namespace

KktState solve_kkt_fixed_gamma(const ProblemData& data, double gamma,
                               std::shared_ptr<const Mesh> mesh,
                               const NewtonConfig& cfg, const KktState* warm)
{
   const KktWorkspace ws(data, std::move(mesh));
   return solve_kkt_core(ws, data, gamma, cfg, warm);
}

ContinuationResult solve_kkt_continuation(const ProblemData& data,
                                          const ContinuationSchedule& schedule,
                                          std::shared_ptr<const Mesh> mesh,
                                          const NewtonConfig& cfg)
{
   const KktWorkspace ws(data, std::move(mesh));
   const std::vector<double> gammas = schedule.gammas();

   std::vector<GammaStep> steps;
   steps.reserve(gammas.size());
   std::optional<KktState> state;
   for (std::size_t k = 0; k < gammas.size(); ++k)
   {
      const double gamma = gammas[k];
      const KktState* warm = state ? &*state : nullptr;
      bool bisected = false;
      try
      {
         state = solve_kkt_core(ws, data, gamma, cfg, warm);
      }
      catch (const NonConvergenceError&)
      {
         if (k == 0) { throw; }
         // One bisection level: pass through the geometric mean first.
         bisected = true;
         const double mid = std::sqrt(gammas[k - 1] * gamma);
         state = solve_kkt_core(ws, data, mid, cfg, warm);
         state = solve_kkt_core(ws, data, gamma, cfg, &*state);
      }
      steps.push_back({gamma, state->report.iterations,
                       state->report.final_residual,
                       state->report.backtrack_total,
                       state->report.fallback_steps, bisected});
   }
   return {std::move(*state), std::move(steps)};
}

} // namespace l1vic
