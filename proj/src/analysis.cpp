#include "l1vic/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace l1vic
{

double compute_eoc(double e1, double e2, double h1, double h2)
{
   if (!(e1 > 0.0) || !(e2 > 0.0))
   {
      throw std::invalid_argument("compute_eoc: errors must be positive");
   }
   if (h1 == h2) { throw std::invalid_argument("compute_eoc: h1 != h2 required"); }
   return (std::log(e1) - std::log(e2)) / (std::log(h1) - std::log(h2));
}

int elements_for_label(double h)
{
   if (!(h > 0.0)) { throw std::invalid_argument("mesh label h must be positive"); }
   const double n = 2.0 / h;
   const int ne = static_cast<int>(std::llround(n));
   if (std::abs(n - ne) > 1e-9 * n || ne < 4 || ne % 4 != 0)
   {
      throw std::invalid_argument(
         "mesh label h = " + std::to_string(h) +
         " does not give a multiple-of-4 element count on (-1,1)");
   }
   return ne;
}

namespace
{

struct Errors
{
   double e_y, e_p, e_u;
};

Errors measure(const KktState& state, const ExactSolution& exact)
{
   return {error_norm(state.y, exact.state_pw(), Norm::L2),
           error_norm(state.p, exact.adjoint_pw(), Norm::L2),
           error_norm(state.u, exact.control_pw(), Norm::L2)};
}

} // namespace

EocTable run_h_study(const ProblemData& data, const ExactSolution& exact,
                     const std::vector<double>& hs,
                     const ContinuationSchedule& schedule,
                     const NewtonConfig& cfg, std::vector<KktState>* states)
{
   EocTable table;
   for (double h : hs)
   {
      const auto mesh = Mesh::uniform(elements_for_label(h));
      std::optional<ContinuationResult> run;
      try
      {
         run = solve_kkt_continuation(data, schedule, mesh, cfg);
      }
      catch (const SolverError& err)
      {
         throw SolverError("run_h_study: h = " + std::to_string(h) +
                           " failed: " + err.what());
      }
      const Errors e = measure(run->state, exact);
      EocRow row;
      row.h = h;
      row.e_y = e.e_y;
      row.e_p = e.e_p;
      row.e_u = e.e_u;
      if (!table.rows.empty())
      {
         const EocRow& prev = table.rows.back();
         if (!(prev.h > h))
         {
            throw std::invalid_argument("run_h_study: hs must decrease strictly");
         }
         row.eoc_y = compute_eoc(prev.e_y, e.e_y, prev.h, h);
         row.eoc_p = compute_eoc(prev.e_p, e.e_p, prev.h, h);
         row.eoc_u = compute_eoc(prev.e_u, e.e_u, prev.h, h);
      }
      table.rows.push_back(row);
      if (states) { states->push_back(std::move(run->state)); }
   }
   return table;
}

GammaStudy run_gamma_study(const ProblemData& data, const ExactSolution& exact,
                           const std::vector<double>& hs,
                           const std::vector<double>& gammas,
                           const NewtonConfig& cfg)
{
   for (std::size_t i = 1; i < gammas.size(); ++i)
   {
      if (!(gammas[i] > gammas[i - 1]))
      {
         throw std::invalid_argument("run_gamma_study: gammas must increase");
      }
   }
   GammaStudy study;
   for (double h : hs)
   {
      const auto mesh = Mesh::uniform(elements_for_label(h));
      GammaSeries series;
      series.h = h;
      std::optional<KktState> state;
      for (double gamma : gammas)
      {
         try
         {
            state = solve_kkt_fixed_gamma(data, gamma, mesh, cfg,
                                          state ? &*state : nullptr);
         }
         catch (const SolverError& err)
         {
            throw SolverError("run_gamma_study: h = " + std::to_string(h) +
                              ", gamma = " + std::to_string(gamma) +
                              " failed: " + err.what());
         }
         const Errors e = measure(*state, exact);
         series.points.push_back({gamma, e.e_y, e.e_p, e.e_u});
      }
      study.series.push_back(std::move(series));
   }
   return study;
}

std::vector<double> default_gamma_grid()
{
   std::vector<double> g;
   for (double v = 1.0; v <= 1e8; v *= 1.5) { g.push_back(v); }
   return g;
}

namespace
{

std::string sci5(double v)
{
   char buf[32];
   std::snprintf(buf, sizeof(buf), "%.4e", v);
   return buf;
}

std::string eoc4(const std::optional<double>& v)
{
   if (!v) { return ""; }
   char buf[32];
   std::snprintf(buf, sizeof(buf), "%.4f", *v);
   return buf;
}

std::ofstream open_out(const std::filesystem::path& path)
{
   std::ofstream out(path);
   if (!out)
   {
      throw std::runtime_error("cannot open output file " + path.string());
   }
   return out;
}

nlohmann::json to_json(const EocTable& table)
{
   nlohmann::json rows = nlohmann::json::array();
   for (const EocRow& r : table.rows)
   {
      nlohmann::json jr;
      jr["h"] = r.h;
      jr["e_y"] = r.e_y;
      jr["eoc_y"] = r.eoc_y ? nlohmann::json(*r.eoc_y) : nlohmann::json();
      jr["e_p"] = r.e_p;
      jr["eoc_p"] = r.eoc_p ? nlohmann::json(*r.eoc_p) : nlohmann::json();
      jr["e_u"] = r.e_u;
      jr["eoc_u"] = r.eoc_u ? nlohmann::json(*r.eoc_u) : nlohmann::json();
      rows.push_back(std::move(jr));
   }
   return nlohmann::json{{"rows", std::move(rows)}};
}

nlohmann::json to_json(const GammaStudy& study)
{
   nlohmann::json series = nlohmann::json::array();
   for (const GammaSeries& s : study.series)
   {
      nlohmann::json points = nlohmann::json::array();
      for (const GammaPoint& p : s.points)
      {
         points.push_back({{"gamma", p.gamma},
                           {"e_y", p.e_y},
                           {"e_p", p.e_p},
                           {"e_u", p.e_u}});
      }
      series.push_back({{"h", s.h}, {"points", std::move(points)}});
   }
   return nlohmann::json{{"series", std::move(series)}};
}

} // namespace

void emit_results(const EocTable& table, const std::filesystem::path& path,
                  OutFormat format)
{
   std::ofstream out = open_out(path);
   if (format == OutFormat::Json)
   {
      out << to_json(table).dump(2) << "\n";
      return;
   }
   out << "h,e_y,eoc_y,e_p,eoc_p,e_u,eoc_u\n";
   for (const EocRow& r : table.rows)
   {
      out << sci5(r.h) << ',' << sci5(r.e_y) << ',' << eoc4(r.eoc_y) << ','
          << sci5(r.e_p) << ',' << eoc4(r.eoc_p) << ',' << sci5(r.e_u) << ','
          << eoc4(r.eoc_u) << "\n";
   }
}

void emit_results(const GammaStudy& study, const std::filesystem::path& path,
                  OutFormat format)
{
   std::ofstream out = open_out(path);
   if (format == OutFormat::Json)
   {
      out << to_json(study).dump(2) << "\n";
      return;
   }
   out << "h,gamma,e_y,e_p,e_u\n";
   for (const GammaSeries& s : study.series)
   {
      for (const GammaPoint& p : s.points)
      {
         out << sci5(s.h) << ',' << sci5(p.gamma) << ',' << sci5(p.e_y) << ','
             << sci5(p.e_p) << ',' << sci5(p.e_u) << "\n";
      }
   }
}

namespace
{

nlohmann::json load_json(const std::filesystem::path& path)
{
   std::ifstream in(path);
   if (!in) { throw std::runtime_error("cannot open " + path.string()); }
   nlohmann::json j;
   in >> j;
   return j;
}

std::optional<double> opt_from(const nlohmann::json& j)
{
   if (j.is_null()) { return std::nullopt; }
   return j.get<double>();
}

} // namespace

EocTable parse_eoc_table_json(const std::filesystem::path& path)
{
   const nlohmann::json j = load_json(path);
   EocTable table;
   for (const auto& jr : j.at("rows"))
   {
      EocRow r;
      r.h = jr.at("h").get<double>();
      r.e_y = jr.at("e_y").get<double>();
      r.eoc_y = opt_from(jr.at("eoc_y"));
      r.e_p = jr.at("e_p").get<double>();
      r.eoc_p = opt_from(jr.at("eoc_p"));
      r.e_u = jr.at("e_u").get<double>();
      r.eoc_u = opt_from(jr.at("eoc_u"));
      table.rows.push_back(r);
   }
   return table;
}

GammaStudy parse_gamma_study_json(const std::filesystem::path& path)
{
   const nlohmann::json j = load_json(path);
   GammaStudy study;
   for (const auto& js : j.at("series"))
   {
      GammaSeries s;
      s.h = js.at("h").get<double>();
      for (const auto& jp : js.at("points"))
      {
         s.points.push_back({jp.at("gamma").get<double>(),
                             jp.at("e_y").get<double>(),
                             jp.at("e_p").get<double>(),
                             jp.at("e_u").get<double>()});
      }
      study.series.push_back(std::move(s));
   }
   return study;
}

void write_solution_csv(const KktState& state, const std::filesystem::path& path)
{
   std::ofstream out = open_out(path);
   out << "x,y,p,u\n";
   const Mesh& mesh = state.y.mesh();
   for (int i = 0; i < mesh.n_nodes(); ++i)
   {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%.16e,%.16e,%.16e,%.16e\n", mesh.node(i),
                    state.y[i], state.p[i], state.u[i]);
      out << buf;
   }
}

} // namespace l1vic
