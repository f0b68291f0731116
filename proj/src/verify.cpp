#include "l1vic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "l1vic/regularization.hpp"

namespace l1vic
{

StationarityReport check_strong_stationarity(const ExactSolution& exact,
                                             int n_samples,
                                             const StationarityOverrides& ov,
                                             double tol)
{
   if (n_samples < 10)
   {
      throw std::invalid_argument("check_strong_stationarity: n_samples >= 10");
   }
   const ExactParams& p = exact.params();
   const Coefficient y_d = ov.desired_state
                              ? *ov.desired_state
                              : Coefficient([&exact](double x)
                                            { return exact.desired_state(x); });
   const Coefficient u_d =
      ov.desired_control
         ? *ov.desired_control
         : Coefficient([&exact](double x) { return exact.desired_control(x); });
   const double mass = ov.multiplier_mass.value_or(exact.multiplier_mass());

   StationarityReport rep;
   for (int j = 0; j < n_samples; ++j)
   {
      const double x = -1.0 + 2.0 * (j + 0.5) / n_samples;
      const double state_res =
         -exact.state_d2(x) + exact.slack(x) - exact.control(x);
      rep.max_state_residual = std::max(rep.max_state_residual,
                                        std::abs(state_res));
      if (std::abs(x) > 1e-9)
      {
         const double adj_res = -exact.adjoint_d2(x) - (exact.state(x) - y_d(x));
         rep.max_adjoint_residual = std::max(rep.max_adjoint_residual,
                                             std::abs(adj_res));
      }
      const double grad_res =
         exact.adjoint(x) + p.nu * (exact.control(x) - u_d(x));
      rep.gradient_residual = std::max(rep.gradient_residual, std::abs(grad_res));
   }

   const double jump =
      exact.adjoint_d1(0.0, Side::Right) - exact.adjoint_d1(0.0, Side::Left);
   rep.kink_mismatch = 0.5 * std::abs(jump - mass);
   rep.cone_value = exact.adjoint(0.0) - p.beta;

   rep.pass = rep.max_state_residual <= tol && rep.max_adjoint_residual <= tol &&
              rep.gradient_residual <= tol && rep.kink_mismatch <= tol &&
              std::abs(rep.cone_value) <= tol;
   return rep;
}

namespace
{

// Adaptive Simpson with absolute tolerance; enough for the arctan
// transition layers, which are smooth at every scale.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth)
{
   const double m = 0.5 * (a + b);
   const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
   const double flm = f(lm), frm = f(rm);
   const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
   const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
   const double delta = left + right - whole;
   if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
   {
      return left + right + delta / 15.0;
   }
   return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
          adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate_adaptive(const F& f, double a, double b, double tol)
{
   if (a == b) { return 0.0; }
   const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
   const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
   return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 52);
}

// integral of adjoint(x) * (1 - smoothed_sign(y(x))) with the sign
// transitions resolved: each element is split at the zero crossing of the
// P1 state before the adaptive pass.
double growth_integral(const ExactSolution& exact, const GridFunction& y,
                       double gamma)
{
   const Mesh& mesh = y.mesh();
   const double per_element_tol = 1e-16;
   double total = 0.0;
   for (int k = 0; k < mesh.n_elements(); ++k)
   {
      const double xl = mesh.node(k), xr = mesh.node(k + 1);
      const double yl = y[k], yr = y[k + 1];
      const double slope = (yr - yl) / (xr - xl);
      const auto f = [&](double x)
      {
         const double yx = yl + slope * (x - xl);
         return exact.adjoint(x) * (1.0 - smoothed_sign(yx, gamma));
      };
      if (yl * yr < 0.0)
      {
         const double xc = xl - yl / slope;
         total += integrate_adaptive(f, xl, xc, per_element_tol);
         total += integrate_adaptive(f, xc, xr, per_element_tol);
      }
      else
      {
         total += integrate_adaptive(f, xl, xr, per_element_tol);
      }
   }
   return total;
}

struct Perturbation
{
   std::string descriptor;
   std::vector<double> per_element; // constant on each mesh element
};

// Deterministic mix of perturbation shapes with ||du||_L2 <= radius:
// the zero perturbation, global constants of both signs, strong negative
// one-element bumps near the origin, and element-wise alternating
// profiles.
std::vector<Perturbation> make_perturbations(const Mesh& mesh, int n_samples,
                                             double radius, std::uint64_t seed)
{
   std::mt19937_64 rng(seed);
   std::uniform_real_distribution<double> unit(0.0, 1.0);
   const int n = mesh.n_elements();
   const double h = mesh.h();
   const int mid = n / 2; // element just right of the origin
   const int spread = std::max(1, static_cast<int>(0.1 / h));

   std::vector<Perturbation> out;
   out.reserve(n_samples);
   for (int k = 0; k < n_samples; ++k)
   {
      Perturbation pert;
      pert.per_element.assign(n, 0.0);
      std::ostringstream tag;
      if (k == 0)
      {
         tag << "zero";
      }
      else if (k % 3 == 1)
      {
         // Negative bump covering one element near the origin; amplitude
         // uses most of the radius so the state is pushed below zero.
         const double amp = radius * (0.6 + 0.4 * unit(rng));
         const int offset = static_cast<int>(std::floor((2.0 * unit(rng) - 1.0) *
                                                        spread));
         const int elem = std::clamp(mid + offset, 0, n - 1);
         const double value = -amp / std::sqrt(h);
         pert.per_element[elem] = value;
         tag << "bump(elem=" << elem << ",value=" << value << ")";
      }
      else if (k % 3 == 2)
      {
         const double amp = radius * (0.25 + 0.75 * unit(rng));
         const int phase = (unit(rng) < 0.5) ? 0 : 1;
         const double value = amp / std::sqrt(2.0);
         for (int e = 0; e < n; ++e)
         {
            pert.per_element[e] = ((e + phase) % 2 == 0) ? value : -value;
         }
         tag << "alternating(value=" << value << ",phase=" << phase << ")";
      }
      else
      {
         const double amp = radius * (0.25 + 0.75 * unit(rng));
         const double sign = (unit(rng) < 0.5) ? -1.0 : 1.0;
         const double value = sign * amp / std::sqrt(2.0);
         pert.per_element.assign(n, value);
         tag << "const(value=" << value << ")";
      }
      pert.descriptor = tag.str();
      out.push_back(std::move(pert));
   }
   return out;
}

} // namespace

GrowthSampleReport check_growth_condition(const ExactSolution& exact,
                                          std::shared_ptr<const Mesh> mesh,
                                          double gamma_oracle, int n_samples,
                                          double radius, std::uint64_t seed,
                                          const NewtonConfig& cfg)
{
   if (!(gamma_oracle >= 1e10))
   {
      throw std::invalid_argument(
         "check_growth_condition: gamma_oracle >= 1e10 (slack substitution)");
   }
   if (!(radius > 0.0) || radius > exact.params().eps)
   {
      throw std::invalid_argument(
         "check_growth_condition: need 0 < radius <= eps");
   }
   if (n_samples < 1)
   {
      throw std::invalid_argument("check_growth_condition: n_samples >= 1");
   }

   const double mass = exact.multiplier_mass();
   const int zero_node = mesh->n_elements() / 2;
   const std::vector<Perturbation> perts =
      make_perturbations(*mesh, n_samples, radius, seed);

   GrowthSampleReport rep;
   rep.samples.reserve(n_samples);
   rep.min_total = std::numeric_limits<double>::infinity();
   for (int k = 0; k < n_samples; ++k)
   {
      const Perturbation& pert = perts[k];
      const Coefficient u = [&exact, &pert, &mesh](double x)
      { return exact.control(x) + pert.per_element[mesh->element_of(x)]; };

      std::optional<StateSolve> solve;
      try
      {
         solve = solve_state(mesh, u, gamma_oracle, cfg);
      }
      catch (const SolverError& err)
      {
         throw SolverError("check_growth_condition: sample " +
                           std::to_string(k) + " (" + pert.descriptor +
                           ") failed: " + err.what());
      }
      const GridFunction& y = solve->y;

      GrowthSample s;
      s.descriptor = pert.descriptor;
      s.y_at_zero = y[zero_node];
      s.integral_term = growth_integral(exact, y, gamma_oracle);
      s.total = mass * s.y_at_zero + s.integral_term;

      for (int e = 0; e < mesh->n_elements(); ++e)
      {
         s.control_l1 += integrate_adaptive(
            [&u](double x) { return std::abs(u(x)); }, mesh->node(e),
            mesh->node(e + 1), 1e-14);
         s.max_state_slope = std::max(s.max_state_slope, std::abs(y.slope(e)));
         s.max_abs_slack = std::max(
            {s.max_abs_slack, std::abs(smoothed_sign(y[e], gamma_oracle)),
             std::abs(smoothed_sign(y[e + 1], gamma_oracle))});
      }
      rep.min_total = std::min(rep.min_total, s.total);
      rep.samples.push_back(std::move(s));
   }

   rep.pass = rep.min_total >= -1e-8 * (1.0 + exact.params().beta);
   return rep;
}

} // namespace l1vic
