#ifndef L1VIC_EXACT_SOLUTION_HPP
#define L1VIC_EXACT_SOLUTION_HPP

#include <array>

#include "norms.hpp"

namespace l1vic
{

/// Parameters of the closed-form locally optimal solution on (-1, 1).
///
/// alpha scales the state, beta is the adjoint peak at the origin, m the
/// kink strength (the point multiplier carries mass 2m), nu the Tikhonov
/// weight, and eps the radius of the control neighbourhood on which the
/// quadratic growth condition is certified.
struct ExactParams
{
   double alpha = 0.0;
   double beta = 0.0;
   double m = 0.0;
   double nu = 1.0;
   double eps = 1.0;
};

/// Largest admissible state amplitude: keeps the control nonnegative, so
/// its L1 norm is a plain integral.
inline constexpr double kMaxAlpha = 11.0 / 528.0;

/// Smallest adjoint peak for which the growth-condition argument closes:
/// m * (68*alpha + sqrt(2)*eps + 4) / 2.
double growth_beta_bound(double alpha, double m, double eps);

/// Reference parameter set: m = 1, alpha = 11/528, beta at the bound with
/// eps = 1, nu = 1.
ExactParams default_params();

/// Integral of the (nonnegative) control: 68*alpha + 2.
/// Requires alpha <= 11/528.
double control_l1_norm(const ExactParams& p);

/// Which polynomial piece to evaluate when x sits exactly on a breakpoint:
/// the limit from below (Left) or from above (Right).
enum class Side
{
   Left,
   Right
};

/// The closed-form optimal triple (state, adjoint, control) together with
/// the data functions that make it stationary. All pieces are polynomials
/// glued at {-1/2, 0, 1/2}. Immutable after construction.
class ExactSolution
{
public:
   /// Validates the parameter inequalities; the exception message names
   /// the violated one.
   explicit ExactSolution(const ExactParams& p);

   const ExactParams& params() const { return params_; }

   double state(double x) const;
   double state_d1(double x, Side side = Side::Left) const;
   double state_d2(double x, Side side = Side::Left) const;

   double adjoint(double x) const;
   double adjoint_d1(double x, Side side = Side::Left) const;
   /// Away from the origin only; the distributional part at 0 is carried
   /// by the point multiplier.
   double adjoint_d2(double x) const;

   double control(double x) const;
   double control_d1(double x, Side side = Side::Left) const;

   /// Slack of the complementarity form; identically one for this solution.
   double slack(double) const { return 1.0; }

   /// Data functions: desired_state = state - 2(m+beta),
   /// desired_control = adjoint/nu + control.
   double desired_state(double x) const;
   double desired_control(double x) const;

   /// Mass 2m of the point multiplier sitting at the origin; its pairing
   /// with a continuous v is multiplier_mass() * v(0).
   double multiplier_mass() const { return 2.0 * params_.m; }

   static const std::array<double, 3>& breakpoints();

   PiecewiseFunction state_pw() const;
   PiecewiseFunction adjoint_pw() const;
   PiecewiseFunction control_pw() const;
   PiecewiseFunction desired_state_pw() const;
   PiecewiseFunction desired_control_pw() const;

private:
   ExactParams params_;
};

} // namespace l1vic

#endif
