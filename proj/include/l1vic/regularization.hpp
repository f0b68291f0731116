#ifndef L1VIC_REGULARIZATION_HPP
#define L1VIC_REGULARIZATION_HPP

#include <cmath>

namespace l1vic
{

/// Smooth, strictly increasing surrogate (2/pi)*atan(gamma*s) for the sign
/// function; gamma -> infinity sharpens it towards sgn(s). Range (-1, 1).
inline double smoothed_sign(double s, double gamma)
{
   return M_2_PI * std::atan(gamma * s);
}

/// First derivative 2*gamma / (pi*(1 + gamma^2 s^2)). For |gamma*s| beyond
/// 1e8 the algebraically equivalent form 2 / (pi*gamma*(1/gamma^2 + s^2))
/// is used so no intermediate grows with gamma^2.
inline double smoothed_sign_d1(double s, double gamma)
{
   const double gs = gamma * s;
   if (std::abs(gs) > 1e8)
   {
      return 2.0 / (M_PI * gamma * (1.0 / (gamma * gamma) + s * s));
   }
   return 2.0 * gamma / (M_PI * (1.0 + gs * gs));
}

/// Second derivative -4*gamma^3 s / (pi*(1 + gamma^2 s^2)^2), rewritten as
/// -4*s / (pi*gamma*(1/gamma^2 + s^2)^2) in the saturated regime.
inline double smoothed_sign_d2(double s, double gamma)
{
   const double gs = gamma * s;
   if (std::abs(gs) > 1e8)
   {
      const double r = 1.0 / (gamma * gamma) + s * s;
      return -4.0 * s / (M_PI * gamma * r * r);
   }
   const double w = 1.0 + gs * gs;
   return -4.0 * gamma * gamma * gamma * s / (M_PI * w * w);
}

} // namespace l1vic

#endif
