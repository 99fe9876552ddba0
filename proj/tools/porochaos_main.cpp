// porochaos: sparse pseudo-spectral projection campaigns for the linear Biot
// model. Subcommands: grid, run, validate, sense, convergence, solve.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "porochaos/campaign.hpp"
#include "porochaos/config.hpp"
#include "porochaos/field_io.hpp"
#include "porochaos/mms.hpp"

using namespace porochaos;

namespace {

struct CommonOverrides {
  std::string config_path;
  int level = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOverrides& common, bool config_required = true) {
  auto* opt = cmd->add_option("-c,--config", common.config_path, "campaign config file (JSON)");
  if (config_required) opt->required();
  cmd->add_option("-l,--level", common.level, "override the sparse grid level");
  cmd->add_option("--seed", common.seed, "override the validation seed")
      ->each([&common](const std::string&) { common.seed_set = true; });
  cmd->add_option("-j,--jobs", common.jobs, "parallel node solves");
  cmd->add_option("-o,--out", common.out, "output directory");
}

CampaignConfig load_with_overrides(const CommonOverrides& common) {
  CampaignConfig config = load_campaign_config(common.config_path);
  if (common.level >= 0) config.level = common.level;
  if (common.seed_set) config.seed = common.seed;
  if (common.jobs > 0) config.jobs = common.jobs;
  if (!common.out.empty()) config.output_dir = common.out;
  return config;
}

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> parse_xi(const std::string& text, int dim) {
  std::vector<double> xi;
  std::istringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) xi.push_back(std::stod(cell));
  if (static_cast<int>(xi.size()) != dim)
    throw std::runtime_error("--xi expects " + std::to_string(dim) + " comma-separated values");
  return xi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uncertainty propagation for the linear Biot model via sparse PSP"};
  app.require_subcommand(1);

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "print sparse grid sizes and admissible sets");
  int grid_dim = 4, grid_min = 1, grid_max = 5, grid_level = -1;
  std::string grid_csv;
  grid_cmd->add_option("--dim", grid_dim, "stochastic dimension")->capture_default_str();
  grid_cmd->add_option("--min-level", grid_min, "first level to report")->capture_default_str();
  grid_cmd->add_option("--max-level", grid_max, "last level to report")->capture_default_str();
  grid_cmd->add_option("--csv", grid_csv, "write the nodes of --level to this CSV file");
  grid_cmd->add_option("--level", grid_level, "level for --csv (defaults to --max-level)");

  // run
  auto* run_cmd = app.add_subcommand("run", "run a full campaign and export artifacts");
  CommonOverrides run_common;
  add_common(run_cmd, run_common);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "campaign plus LHS mean-squared-error fields");
  CommonOverrides validate_common;
  int validate_samples = -1;
  add_common(validate_cmd, validate_common);
  validate_cmd->add_option("--samples", validate_samples, "validation sample count N*");

  // sense
  auto* sense_cmd = app.add_subcommand("sense", "campaign plus sensitivity report");
  CommonOverrides sense_common;
  std::string sense_output = "u2";
  add_common(sense_cmd, sense_common);
  sense_cmd->add_option("--output", sense_output, "field for the Sobol report: u1, u2 or p")
      ->check(CLI::IsMember({"u1", "u2", "p"}));

  // convergence
  auto* conv_cmd = app.add_subcommand("convergence", "sweep sparse grid levels and report MSE");
  CommonOverrides conv_common;
  int conv_min = 1, conv_max = 5, conv_samples = 500;
  std::string conv_payload = "biot";
  std::uint64_t conv_seed = 314159;
  int conv_dim = 4;
  add_common(conv_cmd, conv_common, /*config_required=*/false);
  conv_cmd->add_option("--min-level", conv_min)->capture_default_str();
  conv_cmd->add_option("--max-level", conv_max)->capture_default_str();
  conv_cmd->add_option("--samples", conv_samples, "LHS validation points")->capture_default_str();
  conv_cmd->add_option("--payload", conv_payload, "biot (needs --config) or exp-quarter")
      ->check(CLI::IsMember({"biot", "exp-quarter"}));
  conv_cmd->add_option("--payload-seed", conv_seed, "LHS seed for analytic payloads");
  conv_cmd->add_option("--dim", conv_dim, "dimension for analytic payloads")->capture_default_str();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "one deterministic solve at a canonical point");
  CommonOverrides solve_common;
  std::string solve_xi;
  double deform_scale_override = -1.0;
  bool superpose = false;
  add_common(solve_cmd, solve_common);
  solve_cmd->add_option("--xi", solve_xi, "comma-separated canonical point (default: the center)");
  solve_cmd->add_option("--deform-scale", deform_scale_override, "deformation scale for the VTK");
  solve_cmd->add_flag("--superpose", superpose,
                      "two-well only: rebuild the solution from the two unit-pressure "
                      "elementary problems and report the consistency error");

  CLI11_PARSE(app, argc, argv);
  const auto start = std::chrono::steady_clock::now();

  try {
    if (*grid_cmd) {
      std::cout << grid_report(grid_dim, grid_min, grid_max);
      if (!grid_csv.empty()) {
        const int level = grid_level >= 0 ? grid_level : grid_max;
        SparseGrid::build(grid_dim, level).write_nodes_csv(grid_csv);
        std::cout << "nodes of level " << level << " written to " << grid_csv << "\n";
      }
      return 0;
    }

    if (*run_cmd) {
      const CampaignConfig config = load_with_overrides(run_common);
      std::cout << "campaign '" << config.name << "': level " << config.level << ", mesh "
                << config.scenario.mesh->triangle_count() << " triangles, jobs " << config.jobs
                << "\n";
      const CampaignResult result = run_campaign(config);
      export_artifacts(config, result);
      std::printf("solved %d nodes, %d modes; artifacts in %s (%.1f s)\n", result.node_count,
                  result.p.mode_count(), config.output_dir.string().c_str(), elapsed_since(start));
      return 0;
    }

    if (*validate_cmd) {
      CampaignConfig config = load_with_overrides(validate_common);
      if (validate_samples > 0) config.validation_samples = validate_samples;
      const CampaignResult result = run_campaign(config);
      const MseResult mse = mse_field(config, result);
      export_artifacts(config, result, &mse);
      std::printf("N_q = %d, N* = %d (%d excluded)\n", result.node_count, mse.samples,
                  mse.excluded);
      std::printf("|MSE(u - u_K)|_L2 = %.6e, |MSE(p - p_K)|_L2 = %.6e (%.1f s)\n", mse.norm_u,
                  mse.norm_p, elapsed_since(start));
      return 0;
    }

    if (*sense_cmd) {
      CampaignConfig config = load_with_overrides(sense_common);
      config.sobol_output = sense_output;
      const CampaignResult result = run_campaign(config);
      export_artifacts(config, result);
      const char* names[4] = {"mu (xi1)", "lambda (xi2)", "alpha (xi3)", "kappa (xi4)"};
      const Eigen::VectorXd* var = &result.var_u2;
      if (sense_output == "u1") var = &result.var_u1;
      if (sense_output == "p") var = &result.var_p;
      const double total = var->sum();
      std::cout << "integrated variance shares of " << sense_output << ":\n";
      for (int i = 0; i < 4; ++i)
        std::printf("  %-12s first %.4f  total %.4f\n", names[i],
                    result.sobol_first[static_cast<std::size_t>(i)].sum() / total,
                    result.sobol_total[static_cast<std::size_t>(i)].sum() / total);
      std::printf("artifacts in %s (%.1f s)\n", config.output_dir.string().c_str(),
                  elapsed_since(start));
      return 0;
    }

    if (*conv_cmd) {
      if (conv_payload == "exp-quarter") {
        auto payload = [](std::span<const double> xi) {
          double s = 0.0;
          for (double x : xi) s += x;
          return std::exp(0.25 * s);
        };
        const auto rows =
            scalar_convergence_sweep(payload, conv_dim, conv_min, conv_max, conv_samples, conv_seed);
        std::printf("level  nodes      mse\n");
        for (const auto& row : rows) std::printf("%5d  %5d  %.6e\n", row.level, row.nodes, row.mse);
        return 0;
      }
      const CampaignConfig config = load_with_overrides(conv_common);
      CampaignConfig swept = config;
      if (conv_samples > 0) swept.validation_samples = conv_samples;
      const auto rows = convergence_sweep(swept, conv_min, conv_max);
      std::printf("level  nodes   |MSE_u|_L2      |MSE_p|_L2\n");
      for (const auto& row : rows)
        std::printf("%5d  %5d  %.6e  %.6e\n", row.level, row.nodes, row.mse_norm_u, row.mse_norm_p);
      if (!swept.output_dir.empty()) {
        std::filesystem::create_directories(swept.output_dir);
        std::ofstream os(swept.output_dir / "convergence.csv");
        os << "level,nodes,mse_norm_u,mse_norm_p\n";
        for (const auto& row : rows) {
          char buf[128];
          std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", row.level, row.nodes,
                        row.mse_norm_u, row.mse_norm_p);
          os << buf;
        }
        std::cout << "table written to " << (swept.output_dir / "convergence.csv").string() << "\n";
      }
      return 0;
    }

    if (*solve_cmd) {
      const CampaignConfig config = load_with_overrides(solve_common);
      std::vector<double> xi(static_cast<std::size_t>(config.model.dimension()), 0.0);
      if (!solve_xi.empty()) xi = parse_xi(solve_xi, config.model.dimension());
      const PoroelasticSample sample = sample_params(xi, config.model);
      std::printf("sample: mu=%.6g lambda=%.6g alpha=%.6g kappa=%.6g c0=%.6g (%s)\n", sample.mu,
                  sample.lambda, sample.alpha, sample.kappa, sample.c0, config.model.units.c_str());
      const BiotScenario scenario = config.scenario.instantiate(sample);
      const BiotSolver solver(scenario);
      const std::vector<FieldSolution> states = solver.solve_transient();
      const FieldSolution& last = states.back();

      if (superpose) {
        if (config.scenario.kind != ScenarioKind::TwoWell)
          throw std::runtime_error("--superpose applies to the injection-extraction scenario only");
        auto elementary = [&](double p1, double p2) {
          BiotScenario unit = make_two_well_scenario(config.scenario.mesh, p1, p2,
                                                     config.scenario.t_final, config.scenario.steps);
          unit.sample = sample;
          return BiotSolver(unit).solve_transient().back();
        };
        const FieldSolution e1 = elementary(1.0, 0.0);
        const FieldSolution e2 = elementary(0.0, 1.0);
        const Eigen::VectorXd pu =
            config.scenario.p_hole1 * e1.u + config.scenario.p_hole2 * e2.u;
        const Eigen::VectorXd pp =
            config.scenario.p_hole1 * e1.p + config.scenario.p_hole2 * e2.p;
        const double err_u =
            (pu - last.u).cwiseAbs().maxCoeff() / std::max(1e-300, last.u.cwiseAbs().maxCoeff());
        const double err_p =
            (pp - last.p).cwiseAbs().maxCoeff() / std::max(1e-300, last.p.cwiseAbs().maxCoeff());
        std::printf("superposition consistency: rel max error u %.3e, p %.3e\n", err_u, err_p);
      }

      const EnergyReport energy = solver.energy_diagnostic(states);
      if (energy.data_norm_finite)
        std::printf("energy diagnostic: lhs=%.6e rhs=%.6e ratio=%.3f (Korn surrogate %.2f)\n",
                    energy.energy_lhs, energy.data_rhs, energy.ratio, energy.korn_surrogate);
      else
        std::printf("energy diagnostic: lhs=%.6e, data norm not finite (Dirac source)\n",
                    energy.energy_lhs);

      const TriMesh& mesh = *config.scenario.mesh;
      const int nv = mesh.vertex_count();
      const TaylorHoodSpace space(mesh);
      Eigen::VectorXd u1(nv), u2(nv);
      for (int v = 0; v < nv; ++v) {
        u1(v) = last.u(2 * v + 0);
        u2(v) = last.u(2 * v + 1);
      }
      NamedFields fields;
      fields.emplace_back("u1", u1);
      fields.emplace_back("u2", u2);
      fields.emplace_back("p", last.p);
      std::filesystem::create_directories(config.output_dir);
      Deformation deform{u1, u2,
                         deform_scale_override > 0 ? deform_scale_override : config.deform_scale};
      write_vtk(config.output_dir / "solution.vtk", mesh, fields, &deform);
      write_fields_csv(config.output_dir / "solution.csv", mesh, fields);
      std::printf("fields written to %s (%.1f s)\n", config.output_dir.string().c_str(),
                  elapsed_since(start));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
