#ifndef L1VIC_QUADRATURE_HPP
#define L1VIC_QUADRATURE_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace l1vic
{

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadRule
{
   std::vector<double> points;
   std::vector<double> weights;

   int size() const { return static_cast<int>(points.size()); }
};

/// Returns the n-point Gauss-Legendre rule, exact for polynomials of
/// degree 2n-1. Rules are computed once (Newton iteration on P_n) and
/// cached for the lifetime of the process.
inline const QuadRule& gauss_legendre(int n)
{
   if (n < 1 || n > 64)
   {
      throw std::invalid_argument("gauss_legendre: order out of range [1,64]");
   }
   static std::map<int, QuadRule> cache;
   auto it = cache.find(n);
   if (it != cache.end()) { return it->second; }

   QuadRule rule;
   rule.points.resize(n);
   rule.weights.resize(n);
   for (int i = 0; i < n; ++i)
   {
      // Chebyshev-based initial guess for the i-th root of P_n.
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter)
      {
         // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
         double p0 = 1.0, p1 = x;
         for (int k = 2; k <= n; ++k)
         {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
         }
         dp = n * (x * p1 - p0) / (x * x - 1.0);
         const double dx = p1 / dp;
         x -= dx;
         if (std::abs(dx) < 1e-16) { break; }
      }
      rule.points[i] = x;
      rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
   }
   return cache.emplace(n, std::move(rule)).first->second;
}

/// Applies `f` at the mapped quadrature points of [a, b] and accumulates
/// the weighted sum.
template <typename F>
double integrate(const QuadRule& rule, double a, double b, F&& f)
{
   const double mid = 0.5 * (a + b);
   const double hal = 0.5 * (b - a);
   double sum = 0.0;
   for (int q = 0; q < rule.size(); ++q)
   {
      sum += rule.weights[q] * f(mid + hal * rule.points[q]);
   }
   return hal * sum;
}

} // namespace l1vic

#endif
