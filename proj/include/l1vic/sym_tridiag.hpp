#ifndef L1VIC_SYM_TRIDIAG_HPP
#define L1VIC_SYM_TRIDIAG_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace l1vic
{

/// Symmetric tridiagonal matrix (main diagonal + one off-diagonal).
/// This is the only coupling pattern P1 elements produce in 1D.
class SymTridiag
{
public:
   explicit SymTridiag(int n) : diag_(n, 0.0), off_(n > 0 ? n - 1 : 0, 0.0) {}

   int order() const { return static_cast<int>(diag_.size()); }

   double& diag(int i) { return diag_[i]; }
   double diag(int i) const { return diag_[i]; }
   double& off(int i) { return off_[i]; }
   double off(int i) const { return off_[i]; }

   /// this += s * other
   void add_scaled(const SymTridiag& other, double s)
   {
      if (other.order() != order())
      {
         throw std::invalid_argument("SymTridiag::add_scaled: order mismatch");
      }
      for (std::size_t i = 0; i < diag_.size(); ++i) { diag_[i] += s * other.diag_[i]; }
      for (std::size_t i = 0; i < off_.size(); ++i) { off_[i] += s * other.off_[i]; }
   }

   std::vector<double> apply(std::span<const double> x) const
   {
      const int n = order();
      if (static_cast<int>(x.size()) != n)
      {
         throw std::invalid_argument("SymTridiag::apply: size mismatch");
      }
      std::vector<double> y(n);
      for (int i = 0; i < n; ++i)
      {
         double s = diag_[i] * x[i];
         if (i > 0) { s += off_[i - 1] * x[i - 1]; }
         if (i + 1 < n) { s += off_[i] * x[i + 1]; }
         y[i] = s;
      }
      return y;
   }

private:
   std::vector<double> diag_, off_;
};

/// LDL^T factorization of a positive definite SymTridiag. A non-positive
/// pivot aborts the factorization: the matrix is not SPD, which in this
/// code base means an upstream Newton step went wrong.
class SymTridiagFactor
{
public:
   explicit SymTridiagFactor(const SymTridiag& a)
      : d_(a.order()), l_(a.order() > 0 ? a.order() - 1 : 0)
   {
      const int n = a.order();
      for (int i = 0; i < n; ++i)
      {
         double di = a.diag(i);
         if (i > 0) { di -= l_[i - 1] * l_[i - 1] * d_[i - 1]; }
         if (!(di > 0.0))
         {
            throw LinearSolveError("SymTridiagFactor: non-positive pivot at row " +
                                   std::to_string(i) +
                                   " (matrix not positive definite)");
         }
         d_[i] = di;
         if (i + 1 < n) { l_[i] = a.off(i) / di; }
      }
   }

   std::vector<double> solve(std::vector<double> b) const
   {
      const int n = static_cast<int>(d_.size());
      if (static_cast<int>(b.size()) != n)
      {
         throw std::invalid_argument("SymTridiagFactor::solve: size mismatch");
      }
      for (int i = 1; i < n; ++i) { b[i] -= l_[i - 1] * b[i - 1]; }
      for (int i = 0; i < n; ++i) { b[i] /= d_[i]; }
      for (int i = n - 2; i >= 0; --i) { b[i] -= l_[i] * b[i + 1]; }
      return b;
   }

private:
   std::vector<double> d_, l_;
};

/// Factor-and-solve convenience for a single right-hand side.
inline std::vector<double> solve_spd_tridiag(const SymTridiag& a,
                                             std::vector<double> rhs)
{
   return SymTridiagFactor(a).solve(std::move(rhs));
}

} // namespace l1vic

#endif
