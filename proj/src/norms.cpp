#include "l1vic/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "l1vic/quadrature.hpp"

namespace l1vic
{

namespace
{

constexpr int kLinfSamplesPerElement = 17;

void require_breakpoints_on_nodes(const Mesh& mesh,
                                  const std::vector<double>& breakpoints)
{
   for (double b : breakpoints)
   {
      if (b <= -1.0 || b >= 1.0) { continue; }
      const double k = (b + 1.0) / mesh.h();
      if (std::abs(k - std::round(k)) > 1e-12 / mesh.h())
      {
         throw std::invalid_argument(
            "error_norm: breakpoint " + std::to_string(b) +
            " does not coincide with a mesh node");
      }
   }
}

double accumulate_norm(const Mesh& mesh, Norm which, int quad_points,
                       const std::vector<double>& breakpoints,
                       const Coefficient& diff_value,
                       const Coefficient& diff_deriv)
{
   require_breakpoints_on_nodes(mesh, breakpoints);
   const int n = mesh.n_elements();
   const double h = mesh.h();

   if (which == Norm::Linf)
   {
      double m = 0.0;
      for (int k = 0; k < n; ++k)
      {
         const double xl = mesh.node(k);
         for (int s = 0; s <= kLinfSamplesPerElement; ++s)
         {
            const double x = xl + h * s / kLinfSamplesPerElement;
            m = std::max(m, std::abs(diff_value(x)));
         }
      }
      return m;
   }

   const QuadRule& rule = gauss_legendre(quad_points);
   double sum_val = 0.0, sum_der = 0.0;
   for (int k = 0; k < n; ++k)
   {
      const double xl = mesh.node(k);
      for (int q = 0; q < rule.size(); ++q)
      {
         const double x = xl + 0.5 * h * (1.0 + rule.points[q]);
         const double wq = 0.5 * h * rule.weights[q];
         const double dv = diff_value(x);
         sum_val += wq * dv * dv;
         if (which == Norm::H1)
         {
            const double dd = diff_deriv(x);
            sum_der += wq * dd * dd;
         }
      }
   }
   return std::sqrt(sum_val + sum_der);
}

} // namespace

double error_norm(const GridFunction& f_h, const PiecewiseFunction& f,
                  Norm which, int quad_points)
{
   const Mesh& mesh = f_h.mesh();
   const Coefficient diff = [&](double x) { return f_h.value(x) - f.value(x); };
   const Coefficient ddiff = [&](double x)
   { return f_h.slope(mesh.element_of(x)) - f.deriv(x); };
   return accumulate_norm(mesh, which, quad_points, f.breakpoints, diff, ddiff);
}

double function_norm(const Mesh& mesh, const PiecewiseFunction& f, Norm which,
                     int quad_points)
{
   return accumulate_norm(mesh, which, quad_points, f.breakpoints, f.value,
                          f.deriv);
}

double l2_norm(const GridFunction& g)
{
   // (g, g) with the exact P1 mass form, elementwise Simpson-equivalent.
   const Mesh& mesh = g.mesh();
   const double h = mesh.h();
   double s = 0.0;
   for (int k = 0; k < mesh.n_elements(); ++k)
   {
      const double a = g[k], b = g[k + 1];
      s += h / 3.0 * (a * a + a * b + b * b);
   }
   return std::sqrt(s);
}

double h1_norm(const GridFunction& g)
{
   const Mesh& mesh = g.mesh();
   const double h = mesh.h();
   double s = 0.0;
   for (int k = 0; k < mesh.n_elements(); ++k)
   {
      const double d = (g[k + 1] - g[k]) / h;
      s += h * d * d;
   }
   const double l2 = l2_norm(g);
   return std::sqrt(s + l2 * l2);
}

} // namespace l1vic
