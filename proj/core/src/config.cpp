#include "porochaos/config.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace porochaos {

namespace {

using nlohmann::json;

CoefficientTransform parse_transform(const json& j, const UncertaintyModel& model, bool is_alpha) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") {
    double lo;
    if (is_alpha && j.at("min").is_string() && j.at("min").get<std::string>() == "zimmerman")
      lo = zimmerman_bound(model.phi);
    else
      lo = j.at("min").get<double>();
    return CoefficientTransform::uniform(lo, j.at("max").get<double>());
  }
  if (kind == "log10-uniform") {
    return CoefficientTransform::log10_uniform(j.value("scale", 1.0), j.at("exp_min").get<double>(),
                                               j.at("exp_max").get<double>());
  }
  throw std::invalid_argument("config: unknown transform kind '" + kind + "'");
}

UncertaintyModel parse_model(const json& j) {
  UncertaintyModel m;
  m.phi = j.at("phi").get<double>();
  m.K_f = j.at("fluid_bulk_modulus").get<double>();
  m.spatial_dim = j.value("spatial_dimension", 2);
  m.units = j.value("units", std::string("unspecified"));
  m.mu = parse_transform(j.at("mu"), m, false);
  m.lambda = parse_transform(j.at("lambda"), m, false);
  m.alpha = parse_transform(j.at("alpha"), m, true);
  m.kappa = parse_transform(j.at("kappa"), m, false);
  m.validate();
  return m;
}

std::shared_ptr<const TriMesh> parse_mesh(const json& j, const std::filesystem::path& base,
                                          ScenarioKind kind, const json& scenario) {
  if (j.contains("file")) {
    std::filesystem::path p = j.at("file").get<std::string>();
    if (p.is_relative()) p = base / p;
    return std::make_shared<const TriMesh>(TriMesh::load(p));
  }
  const std::string gen = j.at("generator").get<std::string>();
  if (gen == "unit-square") {
    const int n = j.at("cells").get<int>();
    if (kind == ScenarioKind::Footing) {
      const auto span = scenario.value("load_span", std::vector<double>{0.3, 0.7});
      return std::make_shared<const TriMesh>(make_footing_mesh(n, span.at(0), span.at(1)));
    }
    return std::make_shared<const TriMesh>(make_unit_square_crisscross(n));
  }
  if (gen == "rectangle") {
    const auto size = j.at("size").get<std::vector<double>>();
    const auto cells = j.at("cells").get<std::vector<int>>();
    if (kind == ScenarioKind::TwoWell) {
      const auto w1 = scenario.at("wells").at("left").at("rect").get<std::vector<double>>();
      const auto w2 = scenario.at("wells").at("right").at("rect").get<std::vector<double>>();
      return std::make_shared<const TriMesh>(
          make_two_well_mesh(size.at(0), size.at(1), cells.at(0), cells.at(1),
                             {w1.at(0), w1.at(1), w1.at(2), w1.at(3)},
                             {w2.at(0), w2.at(1), w2.at(2), w2.at(3)}));
    }
    return std::make_shared<const TriMesh>(
        make_rect_crisscross(0.0, 0.0, size.at(0), size.at(1), cells.at(0), cells.at(1)));
  }
  throw std::invalid_argument("config: unknown mesh generator '" + gen + "'");
}

BoundaryCondition parse_bc(const json& j) {
  BoundaryCondition bc;
  auto dirichlet = [&](const char* key) -> std::optional<ScalarFieldT> {
    if (!j.contains(key)) return std::nullopt;
    return BoundaryCondition::constant(j.at(key).get<double>());
  };
  bc.u1 = dirichlet("u1");
  bc.u2 = dirichlet("u2");
  bc.p = dirichlet("p");
  if (j.contains("traction")) {
    const auto t = j.at("traction").get<std::vector<double>>();
    const Eigen::Vector2d tr(t.at(0), t.at(1));
    bc.traction = [tr](const Eigen::Vector2d&, double) { return tr; };
  }
  return bc;
}

ScenarioSpec parse_scenario(const json& j, const std::filesystem::path& base) {
  ScenarioSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "injection")
    spec.kind = ScenarioKind::Injection;
  else if (kind == "footing")
    spec.kind = ScenarioKind::Footing;
  else if (kind == "injection-extraction")
    spec.kind = ScenarioKind::TwoWell;
  else if (kind == "custom")
    spec.kind = ScenarioKind::Custom;
  else
    throw std::invalid_argument("config: unknown scenario kind '" + kind + "'");

  spec.mesh = parse_mesh(j.at("mesh"), base, spec.kind, j);

  if (j.contains("point_source")) {
    const auto& ps = j.at("point_source");
    const auto x = ps.at("x").get<std::vector<double>>();
    spec.source_location = {x.at(0), x.at(1)};
    spec.source_magnitude = ps.at("magnitude").get<double>();
  }
  if (j.contains("traction")) {
    const auto t = j.at("traction").at("value").get<std::vector<double>>();
    spec.traction = {t.at(0), t.at(1)};
  }
  if (j.contains("wells")) {
    spec.p_hole1 = j.at("wells").at("left").at("pressure").get<double>();
    spec.p_hole2 = j.at("wells").at("right").at("pressure").get<double>();
  }
  if (j.contains("boundary_conditions"))
    for (const auto& bj : j.at("boundary_conditions"))
      spec.bcs[bj.at("tag").get<int>()] = parse_bc(bj);
  spec.volumetric_source = j.value("volumetric_source", 0.0);
  spec.zero_mean_pressure = j.value("zero_mean_pressure", false);
  spec.pin_rigid_motions = j.value("pin_rigid_motions", false);
  spec.korn_surrogate = j.value("korn_surrogate", 2.0);

  const auto& time = j.at("time");
  spec.t_final = time.at("t_final").get<double>();
  spec.steps = time.at("steps").get<int>();
  return spec;
}

}  // namespace

CampaignConfig load_campaign_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("config: cannot open " + path.string());
  json j;
  try {
    is >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config: " + path.string() + ": " + e.what());
  }

  CampaignConfig config;
  config.name = j.value("name", path.stem().string());
  config.model = parse_model(j.at("model"));
  config.scenario = parse_scenario(j.at("scenario"), path.parent_path());

  if (j.contains("campaign")) {
    const auto& c = j.at("campaign");
    config.level = c.value("level", 2);
    config.validation_samples = c.value("validation_samples", 500);
    config.seed = c.value("seed", static_cast<std::uint64_t>(20260810));
    config.jobs = c.value("jobs", 1);
    config.output_dir = c.value("output_dir", std::string("out"));
    config.deform_scale = c.value("deform_scale", 1.0);
    config.expand_all_steps = c.value("expand_all_steps", false);
    config.sobol_output = c.value("sobol_output", std::string("u2"));
  }
  return config;
}

}  // namespace porochaos
