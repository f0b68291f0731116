#include "l1vic/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "l1vic/quadrature.hpp"

namespace l1vic
{

SymTridiag assemble_stiffness(const Mesh& mesh)
{
   const int m = mesh.n_interior();
   const double h = mesh.h();
   SymTridiag a(m);
   for (int i = 0; i < m; ++i) { a.diag(i) = 2.0 / h; }
   for (int i = 0; i + 1 < m; ++i) { a.off(i) = -1.0 / h; }
   return a;
}

SymTridiag assemble_mass(const Mesh& mesh)
{
   const int m = mesh.n_interior();
   const double h = mesh.h();
   SymTridiag a(m);
   for (int i = 0; i < m; ++i) { a.diag(i) = 2.0 * h / 3.0; }
   for (int i = 0; i + 1 < m; ++i) { a.off(i) = h / 6.0; }
   return a;
}

namespace
{

// Evaluates the two local P1 shape functions on [xl, xr] at x.
inline void shape_pair(double x, double xl, double h, double& sl, double& sr)
{
   const double t = (x - xl) / h;
   sl = 1.0 - t;
   sr = t;
}

} // namespace

SymTridiag assemble_weighted_mass(const Mesh& mesh, const Coefficient& weight,
                                  int quad_points)
{
   const int n = mesh.n_elements();
   const int m = mesh.n_interior();
   const double h = mesh.h();
   const QuadRule& rule = gauss_legendre(quad_points);
   SymTridiag b(m);
   for (int k = 0; k < n; ++k)
   {
      const double xl = mesh.node(k);
      double mll = 0.0, mlr = 0.0, mrr = 0.0;
      for (int q = 0; q < rule.size(); ++q)
      {
         const double x = xl + 0.5 * h * (1.0 + rule.points[q]);
         const double w = weight(x);
         if (!std::isfinite(w))
         {
            throw std::domain_error(
               "assemble_weighted_mass: weight is not finite at x = " +
               std::to_string(x));
         }
         const double wq = 0.5 * h * rule.weights[q] * w;
         double sl, sr;
         shape_pair(x, xl, h, sl, sr);
         mll += wq * sl * sl;
         mlr += wq * sl * sr;
         mrr += wq * sr * sr;
      }
      // Element (k) couples global nodes k and k+1; interior index = node-1.
      const int il = k - 1, ir = k;
      if (il >= 0) { b.diag(il) += mll; }
      if (ir < m) { b.diag(ir) += mrr; }
      if (il >= 0 && ir < m) { b.off(il) += mlr; }
   }
   return b;
}

std::vector<double> load_vector(const Mesh& mesh, const Coefficient& f,
                                int quad_points)
{
   const int n = mesh.n_elements();
   const int m = mesh.n_interior();
   const double h = mesh.h();
   const QuadRule& rule = gauss_legendre(quad_points);
   std::vector<double> load(m, 0.0);
   for (int k = 0; k < n; ++k)
   {
      const double xl = mesh.node(k);
      double ll = 0.0, lr = 0.0;
      for (int q = 0; q < rule.size(); ++q)
      {
         const double x = xl + 0.5 * h * (1.0 + rule.points[q]);
         const double wq = 0.5 * h * rule.weights[q] * f(x);
         double sl, sr;
         shape_pair(x, xl, h, sl, sr);
         ll += wq * sl;
         lr += wq * sr;
      }
      if (k - 1 >= 0) { load[k - 1] += ll; }
      if (k < m) { load[k] += lr; }
   }
   return load;
}

std::vector<double> mass_apply(const GridFunction& g)
{
   const Mesh& mesh = g.mesh();
   const int m = mesh.n_interior();
   const double h = mesh.h();
   std::vector<double> load(m);
   for (int i = 1; i <= m; ++i)
   {
      load[i - 1] = h / 6.0 * (g[i - 1] + 4.0 * g[i] + g[i + 1]);
   }
   return load;
}

std::vector<double> load_vector_composed(const GridFunction& g,
                                         const std::function<double(double)>& f,
                                         int quad_points)
{
   const Mesh& mesh = g.mesh();
   const int n = mesh.n_elements();
   const int m = mesh.n_interior();
   const double h = mesh.h();
   const QuadRule& rule = gauss_legendre(quad_points);
   std::vector<double> load(m, 0.0);
   for (int k = 0; k < n; ++k)
   {
      const double gl = g[k], gr = g[k + 1];
      double ll = 0.0, lr = 0.0;
      for (int q = 0; q < rule.size(); ++q)
      {
         const double t = 0.5 * (1.0 + rule.points[q]);
         const double val = f((1.0 - t) * gl + t * gr);
         const double wq = 0.5 * h * rule.weights[q] * val;
         ll += wq * (1.0 - t);
         lr += wq * t;
      }
      if (k - 1 >= 0) { load[k - 1] += ll; }
      if (k < m) { load[k] += lr; }
   }
   return load;
}

std::vector<double> load_vector_composed_pair(
   const GridFunction& g, const GridFunction& p,
   const std::function<double(double)>& f, int quad_points)
{
   const Mesh& mesh = g.mesh();
   if (&p.mesh() != &mesh)
   {
      throw std::invalid_argument("load_vector_composed_pair: mesh mismatch");
   }
   const int n = mesh.n_elements();
   const int m = mesh.n_interior();
   const double h = mesh.h();
   const QuadRule& rule = gauss_legendre(quad_points);
   std::vector<double> load(m, 0.0);
   for (int k = 0; k < n; ++k)
   {
      const double gl = g[k], gr = g[k + 1];
      const double pl = p[k], pr = p[k + 1];
      double ll = 0.0, lr = 0.0;
      for (int q = 0; q < rule.size(); ++q)
      {
         const double t = 0.5 * (1.0 + rule.points[q]);
         const double val = f((1.0 - t) * gl + t * gr) * ((1.0 - t) * pl + t * pr);
         const double wq = 0.5 * h * rule.weights[q] * val;
         ll += wq * (1.0 - t);
         lr += wq * t;
      }
      if (k - 1 >= 0) { load[k - 1] += ll; }
      if (k < m) { load[k] += lr; }
   }
   return load;
}

} // namespace l1vic
