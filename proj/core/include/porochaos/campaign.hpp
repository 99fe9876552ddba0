#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "porochaos/biot.hpp"
#include "porochaos/coefficient_model.hpp"
#include "porochaos/psp.hpp"
#include "porochaos/scenarios.hpp"

namespace porochaos {

enum class ScenarioKind { Injection, Footing, TwoWell, Custom };

/// Geometry, data, and time axis of a scenario family; instantiating with a
/// parameter sample yields one deterministic problem. The mesh is shared
/// between instances.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Injection;
  std::shared_ptr<const TriMesh> mesh;

  Eigen::Vector2d source_location{0.25, 0.25};
  double source_magnitude = 10.0;
  Eigen::Vector2d traction{0.0, -5.0};
  double p_hole1 = -1.0e-4;
  double p_hole2 = 1.0e-4;
  double t_final = 1.0;
  int steps = 10;

  // Custom scenarios carry their own boundary table and constant sources.
  std::map<int, BoundaryCondition> bcs;
  double volumetric_source = 0.0;
  bool zero_mean_pressure = false;
  bool pin_rigid_motions = false;
  double korn_surrogate = 2.0;

  BiotScenario instantiate(const PoroelasticSample& sample) const;
};

struct CampaignConfig {
  std::string name = "campaign";
  UncertaintyModel model = UncertaintyModel::sand_kpa();
  ScenarioSpec scenario;
  int level = 2;
  int validation_samples = 500;
  std::uint64_t seed = 20260810;
  int jobs = 1;
  std::filesystem::path output_dir = "out";
  double deform_scale = 1.0;
  bool expand_all_steps = false;   // expansions at every time step, not only t_final
  bool keep_node_outputs = false;  // retain the raw per-node payload matrices
  std::string sobol_output = "u2";
};

/// Final-time nodal fields of one deterministic solve (per P2 node for the
/// displacement components, per vertex for pressure).
struct NodeOutput {
  Eigen::VectorXd u1, u2, p;
};

struct CampaignResult {
  int dimension = 0;
  int level = 0;
  int node_count = 0;

  ChaosExpansion u1, u2, p;
  Eigen::VectorXd mean_u1, mean_u2, mean_p;
  Eigen::VectorXd var_u1, var_u2, var_p;
  Eigen::VectorXd cov_u1_u2, cov_u1_p, cov_u2_p;

  std::string sobol_output;
  std::vector<Eigen::VectorXd> sobol_first, sobol_total;  // one field per input dimension
  Eigen::VectorXd sobol_first_sum;                        // sum_i Var_i, to compare with Var

  std::vector<ChaosExpansion> step_expansions_p;  // populated when expand_all_steps

  std::optional<Eigen::MatrixXd> nodes_u1, nodes_u2, nodes_p;  // when keep_node_outputs
};

/// Evaluate a payload function at every grid node with bounded parallelism;
/// results are reduced in canonical node order, so the output is independent
/// of the worker count. A failure at any node aborts with its index and xi.
Eigen::MatrixXd evaluate_at_nodes(const SparseGrid& grid,
                                  const std::function<Eigen::VectorXd(std::span<const double>)>& payload,
                                  int jobs);

/// One deterministic scenario solve at the given canonical point.
NodeOutput solve_scenario_at(const ScenarioSpec& spec, const UncertaintyModel& model,
                             std::span<const double> xi);

CampaignResult run_campaign(const CampaignConfig& config);

struct MseResult {
  Eigen::VectorXd u1, u2, p;  // per-DOF mean squared error fields
  double norm_u = 0.0;        // L2(D) norm of the displacement MSE field
  double norm_p = 0.0;
  int samples = 0;
  int excluded = 0;  // validation points whose solve failed
};

/// Validation against fresh LHS points, re-running the exact solver.
MseResult mse_field(const CampaignConfig& config, const CampaignResult& result);

struct ScalarConvergenceRow {
  int level = 0;
  int nodes = 0;
  double mse = 0.0;
};

/// Level sweep of the PSP surrogate error for a scalar analytic payload,
/// with the LHS validation set held fixed across levels.
std::vector<ScalarConvergenceRow> scalar_convergence_sweep(
    const std::function<double(std::span<const double>)>& payload, int dim, int level_min,
    int level_max, int validation_samples, std::uint64_t seed);

struct FieldConvergenceRow {
  int level = 0;
  int nodes = 0;
  double mse_norm_u = 0.0;
  double mse_norm_p = 0.0;
};

/// Level sweep of the full campaign MSE norms (one campaign per level).
std::vector<FieldConvergenceRow> convergence_sweep(const CampaignConfig& config, int level_min,
                                                   int level_max);

/// Writes VTK/CSV statistic fields (on the deformed mean configuration),
/// mode tables, grid nodes, sensitivity fields, the optional MSE artifacts
/// and convergence table, plus a manifest with content digests.
void export_artifacts(const CampaignConfig& config, const CampaignResult& result,
                      const MseResult* mse = nullptr,
                      const std::vector<FieldConvergenceRow>* convergence = nullptr);

/// Node counts of the doubling-growth nested family (2^l new nodes per 1D
/// level): sum_{s<=l} 2^s binom(s+N-1, N-1). Printed next to our counts by
/// the grid report for convention comparison.
long long doubling_growth_node_count(int dim, int level);

/// Human-readable grid size report comparing the Clenshaw-Curtis counts of
/// this implementation with the doubling-growth reference counts.
std::string grid_report(int dim, int level_min, int level_max);

}  // namespace porochaos
