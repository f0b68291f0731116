#ifndef L1VIC_ANALYSIS_HPP
#define L1VIC_ANALYSIS_HPP

#include <filesystem>
#include <optional>
#include <vector>

#include "kkt_solver.hpp"

namespace l1vic
{

/// One mesh-refinement row: L2 errors of state, adjoint and control
/// against the closed-form solution, plus experimental orders computed
/// from the adjacent coarser row. The coarsest row has no orders.
struct EocRow
{
   double h = 0.0;
   double e_y = 0.0;
   std::optional<double> eoc_y;
   double e_p = 0.0;
   std::optional<double> eoc_p;
   double e_u = 0.0;
   std::optional<double> eoc_u;
};

struct EocTable
{
   std::vector<EocRow> rows;
};

/// log(e1/e2) / log(h1/h2). Rejects non-positive errors (an exact zero
/// upstream means the comparison is degenerate) and equal mesh sizes.
double compute_eoc(double e1, double e2, double h1, double h2);

struct GammaPoint
{
   double gamma = 0.0;
   double e_y = 0.0;
   double e_p = 0.0;
   double e_u = 0.0;
};

struct GammaSeries
{
   double h = 0.0;
   std::vector<GammaPoint> points;
};

struct GammaStudy
{
   std::vector<GammaSeries> series;
};

/// Runs the continuation solve for every mesh size in `hs` (given as the
/// table label h = 1/n, i.e. a mesh of 2n elements) and measures the L2
/// errors against the exact solution. `states`, when non-null, receives
/// the final iterate per mesh for nodal dumps.
EocTable run_h_study(const ProblemData& data, const ExactSolution& exact,
                     const std::vector<double>& hs,
                     const ContinuationSchedule& schedule,
                     const NewtonConfig& cfg = {},
                     std::vector<KktState>* states = nullptr);

/// Fixed-gamma sweeps: for each h, solves along the increasing gamma grid
/// (warm-started) and records the errors at every grid point.
GammaStudy run_gamma_study(const ProblemData& data, const ExactSolution& exact,
                           const std::vector<double>& hs,
                           const std::vector<double>& gammas,
                           const NewtonConfig& cfg = {});

/// Default gamma grid of the saturation study: powers of 1.5 from 1,
/// truncated at 1e8.
std::vector<double> default_gamma_grid();

enum class OutFormat
{
   Csv,
   Json
};

/// Writes `h,e_y,eoc_y,e_p,eoc_p,e_u,eoc_u` rows (CSV, errors in %.4e
/// scientific form, orders with four decimals, empty cells for missing
/// orders) or the equivalent JSON document.
void emit_results(const EocTable& table, const std::filesystem::path& path,
                  OutFormat format);
void emit_results(const GammaStudy& study, const std::filesystem::path& path,
                  OutFormat format);

/// Inverse of emit_results(..., Json); round-trips bit-exactly.
EocTable parse_eoc_table_json(const std::filesystem::path& path);
GammaStudy parse_gamma_study_json(const std::filesystem::path& path);

/// Nodal dump `x,y,p,u` of one solve, for external plotting.
void write_solution_csv(const KktState& state,
                        const std::filesystem::path& path);

/// Converts a table label h = 1/n into the element count 2n of the mesh
/// on (-1, 1); rejects labels that do not give an admissible mesh.
int elements_for_label(double h);

} // namespace l1vic

#endif
