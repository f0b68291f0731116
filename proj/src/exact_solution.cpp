#include "l1vic/exact_solution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace l1vic
{

double growth_beta_bound(double alpha, double m, double eps)
{
   return 0.5 * m * (68.0 * alpha + std::sqrt(2.0) * eps + 4.0);
}

ExactParams default_params()
{
   ExactParams p;
   p.alpha = kMaxAlpha;
   p.m = 1.0;
   p.nu = 1.0;
   p.eps = 1.0;
   p.beta = growth_beta_bound(p.alpha, p.m, p.eps);
   return p;
}

double control_l1_norm(const ExactParams& p)
{
   if (!(p.alpha > 0.0) || p.alpha > kMaxAlpha)
   {
      throw std::invalid_argument(
         "control_l1_norm: requires 0 < alpha <= 11/528");
   }
   return 68.0 * p.alpha + 2.0;
}

ExactSolution::ExactSolution(const ExactParams& p) : params_(p)
{
   if (!(p.alpha > 0.0))
   {
      throw std::invalid_argument("ExactSolution: violated alpha > 0");
   }
   if (!(p.alpha <= kMaxAlpha))
   {
      throw std::invalid_argument(
         "ExactSolution: violated alpha <= 11/528 (control changes sign)");
   }
   if (!(p.m > 0.0)) { throw std::invalid_argument("ExactSolution: violated m > 0"); }
   if (!(p.nu > 0.0)) { throw std::invalid_argument("ExactSolution: violated nu > 0"); }
   if (!(p.eps > 0.0)) { throw std::invalid_argument("ExactSolution: violated eps > 0"); }
   if (!(p.beta >= growth_beta_bound(p.alpha, p.m, p.eps)))
   {
      throw std::invalid_argument(
         "ExactSolution: violated beta >= m*(68*alpha + sqrt(2)*eps + 4)/2");
   }
}

namespace
{

// Piece selectors: 0 left of -1/2, 1 on the middle interval, 2 right of 1/2.
inline int state_piece(double x, Side side)
{
   if (side == Side::Left)
   {
      return x <= -0.5 ? 0 : (x <= 0.5 ? 1 : 2);
   }
   return x < -0.5 ? 0 : (x < 0.5 ? 1 : 2);
}

// Adjoint pieces: 0 on [-1, 0], 1 on (0, 1].
inline int adjoint_piece(double x, Side side)
{
   if (side == Side::Left) { return x <= 0.0 ? 0 : 1; }
   return x < 0.0 ? 0 : 1;
}

} // namespace

double ExactSolution::state(double x) const
{
   const double a = params_.alpha;
   switch (state_piece(x, x < 0.0 ? Side::Right : Side::Left))
   {
      case 0: return 88.0 * a * x * x * x + 156.0 * a * x * x + 82.0 * a * x + 14.0 * a;
      case 1: return 16.0 * a * x * x * x * x;
      default: return -88.0 * a * x * x * x + 156.0 * a * x * x - 82.0 * a * x + 14.0 * a;
   }
}

double ExactSolution::state_d1(double x, Side side) const
{
   const double a = params_.alpha;
   switch (state_piece(x, side))
   {
      case 0: return 264.0 * a * x * x + 312.0 * a * x + 82.0 * a;
      case 1: return 64.0 * a * x * x * x;
      default: return -264.0 * a * x * x + 312.0 * a * x - 82.0 * a;
   }
}

double ExactSolution::state_d2(double x, Side side) const
{
   const double a = params_.alpha;
   switch (state_piece(x, side))
   {
      case 0: return 528.0 * a * x + 312.0 * a;
      case 1: return 192.0 * a * x * x;
      default: return -528.0 * a * x + 312.0 * a;
   }
}

double ExactSolution::adjoint(double x) const
{
   const double m = params_.m, b = params_.beta;
   if (adjoint_piece(x, Side::Left) == 0) { return -(m + b) * x * x - m * x + b; }
   return -(m + b) * x * x + m * x + b;
}

double ExactSolution::adjoint_d1(double x, Side side) const
{
   const double m = params_.m, b = params_.beta;
   if (adjoint_piece(x, side) == 0) { return -2.0 * (m + b) * x - m; }
   return -2.0 * (m + b) * x + m;
}

double ExactSolution::adjoint_d2(double) const
{
   return -2.0 * (params_.m + params_.beta);
}

double ExactSolution::control(double x) const
{
   const double a = params_.alpha;
   switch (state_piece(x, x < 0.0 ? Side::Right : Side::Left))
   {
      case 0: return -528.0 * a * x - 312.0 * a + 1.0;
      case 1: return -192.0 * a * x * x + 1.0;
      default: return 528.0 * a * x - 312.0 * a + 1.0;
   }
}

double ExactSolution::control_d1(double x, Side side) const
{
   const double a = params_.alpha;
   switch (state_piece(x, side))
   {
      case 0: return -528.0 * a;
      case 1: return -384.0 * a * x;
      default: return 528.0 * a;
   }
}

double ExactSolution::desired_state(double x) const
{
   return state(x) - 2.0 * (params_.m + params_.beta);
}

double ExactSolution::desired_control(double x) const
{
   return adjoint(x) / params_.nu + control(x);
}

const std::array<double, 3>& ExactSolution::breakpoints()
{
   static const std::array<double, 3> b = {-0.5, 0.0, 0.5};
   return b;
}

namespace
{

std::vector<double> breakpoint_list()
{
   const auto& b = ExactSolution::breakpoints();
   return std::vector<double>(b.begin(), b.end());
}

} // namespace

PiecewiseFunction ExactSolution::state_pw() const
{
   return {[*this](double x) { return state(x); },
           [*this](double x) { return state_d1(x); }, breakpoint_list()};
}

PiecewiseFunction ExactSolution::adjoint_pw() const
{
   return {[*this](double x) { return adjoint(x); },
           [*this](double x) { return adjoint_d1(x); }, breakpoint_list()};
}

PiecewiseFunction ExactSolution::control_pw() const
{
   return {[*this](double x) { return control(x); },
           [*this](double x) { return control_d1(x); }, breakpoint_list()};
}

PiecewiseFunction ExactSolution::desired_state_pw() const
{
   return {[*this](double x) { return desired_state(x); },
           [*this](double x) { return state_d1(x); }, breakpoint_list()};
}

PiecewiseFunction ExactSolution::desired_control_pw() const
{
   return {[*this](double x) { return desired_control(x); },
           [*this](double x) { return adjoint_d1(x) / params_.nu + control_d1(x); },
           breakpoint_list()};
}

} // namespace l1vic
