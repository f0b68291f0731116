#ifndef L1VIC_GRID_FUNCTION_HPP
#define L1VIC_GRID_FUNCTION_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "mesh.hpp"

namespace l1vic
{

/// Piecewise-linear (P1) function on a Mesh, stored by nodal values.
/// Functions representing H^1_0 members keep exact zeros at both
/// boundary nodes; set_interior() preserves that.
class GridFunction
{
public:
   explicit GridFunction(std::shared_ptr<const Mesh> mesh, double init = 0.0)
      : mesh_(std::move(mesh)), v_(mesh_->n_nodes(), init)
   {
   }

   const Mesh& mesh() const { return *mesh_; }
   const std::shared_ptr<const Mesh>& mesh_ptr() const { return mesh_; }

   int size() const { return static_cast<int>(v_.size()); }
   double& operator[](int i) { return v_[i]; }
   double operator[](int i) const { return v_[i]; }
   const std::vector<double>& values() const { return v_; }
   std::vector<double>& values() { return v_; }

   bool boundary_is_zero() const { return v_.front() == 0.0 && v_.back() == 0.0; }

   /// Affine interpolation between the bracketing nodes.
   double value(double x) const
   {
      const int k = mesh_->element_of(x);
      const double t = (x - mesh_->node(k)) / mesh_->h();
      return (1.0 - t) * v_[k] + t * v_[k + 1];
   }

   /// Constant slope on element k.
   double slope(int k) const { return (v_[k + 1] - v_[k]) / mesh_->h(); }

   double max_abs() const
   {
      double m = 0.0;
      for (double x : v_) { m = std::max(m, std::abs(x)); }
      return m;
   }

   /// Overwrites the interior nodal values; boundary values stay put.
   void set_interior(std::span<const double> vals)
   {
      if (static_cast<int>(vals.size()) != mesh_->n_interior())
      {
         throw std::invalid_argument("GridFunction::set_interior: size mismatch");
      }
      for (int i = 0; i < mesh_->n_interior(); ++i) { v_[i + 1] = vals[i]; }
   }

   std::vector<double> interior() const
   {
      return std::vector<double>(v_.begin() + 1, v_.end() - 1);
   }

   static GridFunction interpolate(std::shared_ptr<const Mesh> mesh,
                                   const std::function<double(double)>& f)
   {
      GridFunction g(std::move(mesh));
      for (int i = 0; i < g.size(); ++i) { g[i] = f(g.mesh().node(i)); }
      return g;
   }

private:
   std::shared_ptr<const Mesh> mesh_;
   std::vector<double> v_;
};

} // namespace l1vic

#endif
