#ifndef L1VIC_ERRORS_HPP
#define L1VIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l1vic
{

class SolverError : public std::runtime_error
{
public:
   using std::runtime_error::runtime_error;
};

/// Direct factorization broke down (lost positive definiteness or hit a
/// zero pivot).
class LinearSolveError : public SolverError
{
public:
   using SolverError::SolverError;
};

struct NewtonReport
{
   int iterations = 0;
   double final_residual = 0.0;
   bool converged = false;
   int backtrack_total = 0;
   /// Steps that had to fall back to the Jacobian without the
   /// second-derivative coupling block after backtracking stalled.
   int fallback_steps = 0;
   /// Full steps accepted without a residual decrease. The saturation
   /// transient of cold starts at large gamma is not monotone in the
   /// residual norm although plain Newton pushes through it.
   int nonmonotone_steps = 0;
};

/// Newton ran out of iterations or could not find a descent step.
class NonConvergenceError : public SolverError
{
public:
   NonConvergenceError(const std::string& what, NewtonReport report,
                       double gamma = 0.0)
      : SolverError(what), report_(report), gamma_(gamma)
   {
   }

   const NewtonReport& report() const { return report_; }
   double gamma() const { return gamma_; }

private:
   NewtonReport report_;
   double gamma_;
};

} // namespace l1vic

#endif
