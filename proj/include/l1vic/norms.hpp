#ifndef L1VIC_NORMS_HPP
#define L1VIC_NORMS_HPP

#include <vector>

#include "assembly.hpp"
#include "grid_function.hpp"

namespace l1vic
{

enum class Norm
{
   L2,
   Linf,
   H1
};

/// Reference function that is smooth between its declared breakpoints.
/// `deriv` is only consulted for the H1 norm.
struct PiecewiseFunction
{
   Coefficient value;
   Coefficient deriv;
   std::vector<double> breakpoints;
};

/// || f_h - f || in the requested norm. L2 and the H1 seminorm part use
/// per-element Gauss quadrature; Linf takes the maximum over 17 equispaced
/// samples per element plus the nodes. Every breakpoint of `f` inside
/// (-1,1) must coincide with a mesh node (throws std::invalid_argument
/// otherwise), so each quadrature cell sees a smooth integrand.
double error_norm(const GridFunction& f_h, const PiecewiseFunction& f,
                  Norm which, int quad_points = kDefaultQuadPoints);

/// Norm of a plain coefficient function against zero, same machinery.
double function_norm(const Mesh& mesh, const PiecewiseFunction& f, Norm which,
                     int quad_points = kDefaultQuadPoints);

/// Discrete norms of a grid function from the exact P1 forms.
double l2_norm(const GridFunction& g);
double h1_norm(const GridFunction& g);

} // namespace l1vic

#endif
