#ifndef L1VIC_BAND_MATRIX_HPP
#define L1VIC_BAND_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace l1vic
{

/// General banded matrix with kl sub- and ku super-diagonals, LAPACK-style
/// band storage with kl extra rows of head-room for pivoting fill-in.
/// Used for the interleaved state/adjoint Newton system (kl = ku = 3),
/// which is not symmetric.
class BandMatrix
{
public:
   BandMatrix(int n, int kl, int ku)
      : n_(n), kl_(kl), ku_(ku), rows_(2 * kl + ku + 1),
        ab_(static_cast<std::size_t>(rows_) * n, 0.0), ipiv_(n, 0),
        factored_(false)
   {
      if (n < 1 || kl < 0 || ku < 0)
      {
         throw std::invalid_argument("BandMatrix: bad dimensions");
      }
   }

   int order() const { return n_; }

   /// Entry access within the original band |i-j| <= kl/ku. Writes outside
   /// the band are a programming error.
   double& at(int i, int j)
   {
      if (j - i > ku_ || i - j > kl_)
      {
         throw std::invalid_argument("BandMatrix::at: outside band");
      }
      return entry(i, j);
   }

   double get(int i, int j) const
   {
      if (j - i > ku_ + (factored_ ? kl_ : 0) || i - j > kl_) { return 0.0; }
      return ab_[idx(i, j)];
   }

   /// In-place LU with partial pivoting (banded Doolittle sweep).
   void lu_factor()
   {
      const int kv = kl_ + ku_; // upper bandwidth after fill-in
      for (int j = 0; j < n_; ++j)
      {
         const int iend = std::min(n_ - 1, j + kl_);
         int p = j;
         double pmax = std::abs(entry(j, j));
         for (int i = j + 1; i <= iend; ++i)
         {
            const double v = std::abs(entry(i, j));
            if (v > pmax) { pmax = v; p = i; }
         }
         if (pmax == 0.0)
         {
            throw LinearSolveError("BandMatrix::lu_factor: zero pivot column " +
                                   std::to_string(j));
         }
         ipiv_[j] = p;
         const int kend = std::min(n_ - 1, j + kv);
         if (p != j)
         {
            for (int k = j; k <= kend; ++k) { std::swap(entry(j, k), entry(p, k)); }
         }
         const double piv = entry(j, j);
         for (int i = j + 1; i <= iend; ++i)
         {
            const double m = entry(i, j) / piv;
            entry(i, j) = m;
            for (int k = j + 1; k <= kend; ++k) { entry(i, k) -= m * entry(j, k); }
         }
      }
      factored_ = true;
   }

   /// Solves A x = b using the stored factorization.
   void solve_in_place(std::vector<double>& b) const
   {
      if (!factored_)
      {
         throw std::logic_error("BandMatrix::solve_in_place: factor first");
      }
      if (static_cast<int>(b.size()) != n_)
      {
         throw std::invalid_argument("BandMatrix::solve_in_place: size mismatch");
      }
      const int kv = kl_ + ku_;
      for (int j = 0; j < n_; ++j)
      {
         if (ipiv_[j] != j) { std::swap(b[j], b[ipiv_[j]]); }
         const int iend = std::min(n_ - 1, j + kl_);
         for (int i = j + 1; i <= iend; ++i) { b[i] -= ab_[idx(i, j)] * b[j]; }
      }
      for (int j = n_ - 1; j >= 0; --j)
      {
         const int kend = std::min(n_ - 1, j + kv);
         double s = b[j];
         for (int k = j + 1; k <= kend; ++k) { s -= ab_[idx(j, k)] * b[k]; }
         b[j] = s / ab_[idx(j, j)];
      }
   }

private:
   std::size_t idx(int i, int j) const
   {
      // Row (kl+ku) holds the main diagonal; column index is the matrix column.
      return static_cast<std::size_t>(kl_ + ku_ + i - j) * n_ + j;
   }
   double& entry(int i, int j) { return ab_[idx(i, j)]; }

   int n_, kl_, ku_, rows_;
   std::vector<double> ab_;
   std::vector<int> ipiv_;
   bool factored_;
};

} // namespace l1vic

#endif
