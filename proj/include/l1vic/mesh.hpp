#ifndef L1VIC_MESH_HPP
#define L1VIC_MESH_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace l1vic
{

/// Uniform partition of the interval (-1, 1) into n_elements sub-intervals.
///
/// The element count must be a positive multiple of 4 so that the points
/// {-1/2, 0, 1/2} -- where the problem data loses smoothness -- always
/// coincide with mesh nodes and no quadrature cell straddles them.
/// A mesh labelled "h = 1/n" in result tables has 2n elements here, since
/// the domain has length 2.
class Mesh
{
public:
   explicit Mesh(int n_elements)
      : n_(n_elements), h_(2.0 / n_elements)
   {
      if (n_elements < 4 || n_elements % 4 != 0)
      {
         throw std::invalid_argument(
            "Mesh: element count must be a positive multiple of 4, got " +
            std::to_string(n_elements));
      }
      nodes_.resize(n_ + 1);
      for (int i = 0; i <= n_; ++i) { nodes_[i] = -1.0 + i * h_; }
      nodes_.front() = -1.0;
      nodes_.back() = 1.0;
   }

   static std::shared_ptr<const Mesh> uniform(int n_elements)
   {
      return std::make_shared<const Mesh>(n_elements);
   }

   int n_elements() const { return n_; }
   int n_nodes() const { return n_ + 1; }
   int n_interior() const { return n_ - 1; }
   double h() const { return h_; }

   double node(int i) const { return nodes_[i]; }
   const std::vector<double>& nodes() const { return nodes_; }

   /// Index of the element containing x, clamped to [0, n_elements-1].
   int element_of(double x) const
   {
      int k = static_cast<int>((x + 1.0) / h_);
      if (k < 0) { k = 0; }
      if (k >= n_) { k = n_ - 1; }
      return k;
   }

private:
   int n_;
   double h_;
   std::vector<double> nodes_;
};

} // namespace l1vic

#endif
