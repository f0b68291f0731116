#ifndef L1VIC_ASSEMBLY_HPP
#define L1VIC_ASSEMBLY_HPP

#include <functional>
#include <vector>

#include "grid_function.hpp"
#include "mesh.hpp"
#include "sym_tridiag.hpp"

namespace l1vic
{

/// Scalar coefficient evaluated pointwise on (-1, 1).
using Coefficient = std::function<double(double)>;

/// Fixed per-element Gauss order for every nonlinear or coefficient
/// integral; exact for polynomial integrands up to degree 9.
inline constexpr int kDefaultQuadPoints = 5;

/// Stiffness matrix of the interior P1 basis: entry (i,i) = 2/h,
/// (i,i+1) = -1/h.
SymTridiag assemble_stiffness(const Mesh& mesh);

/// Exact P1 mass matrix of the interior basis: (i,i) = 2h/3, (i,i+1) = h/6.
SymTridiag assemble_mass(const Mesh& mesh);

/// Matrix of (w * phi_j, phi_i) for interior i, j, with w evaluated at the
/// per-element quadrature points. Positive definite whenever w >= w0 > 0.
/// Throws std::domain_error if w is non-finite at any quadrature point.
SymTridiag assemble_weighted_mass(const Mesh& mesh, const Coefficient& weight,
                                  int quad_points = kDefaultQuadPoints);

/// Load vector (f, phi_i) over interior nodes, f sampled by quadrature.
std::vector<double> load_vector(const Mesh& mesh, const Coefficient& f,
                                int quad_points = kDefaultQuadPoints);

/// Load vector (g, phi_i) for a P1 grid function, via the exact mass
/// pairing h/6 * (g_{i-1} + 4 g_i + g_{i+1}).
std::vector<double> mass_apply(const GridFunction& g);

/// Load vector of the composed coefficient x -> f(g(x)) on interior nodes,
/// the nonlinear term of the regularized problems.
std::vector<double> load_vector_composed(const GridFunction& g,
                                         const std::function<double(double)>& f,
                                         int quad_points = kDefaultQuadPoints);

/// Load vector of x -> f(g(x)) * p(x) for P1 functions g, p on one mesh;
/// quadrature-identical to assemble_weighted_mass(f(g)).apply(p).
std::vector<double> load_vector_composed_pair(
   const GridFunction& g, const GridFunction& p,
   const std::function<double(double)>& f,
   int quad_points = kDefaultQuadPoints);

} // namespace l1vic

#endif
