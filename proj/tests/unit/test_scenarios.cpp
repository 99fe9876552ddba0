#include <doctest.h>

#include <cmath>
#include <map>

#include "porochaos/biot.hpp"
#include "porochaos/mms.hpp"
#include "porochaos/scenarios.hpp"

using namespace porochaos;

namespace {

PoroelasticSample rock_sample() {
  PoroelasticSample s;
  s.mu = 11.9;     // GPa
  s.lambda = 7.9;  // GPa
  s.alpha = 0.32;
  s.kappa = 0.16;  // km^2 / (GPa day)
  s.c0 = 0.041;    // 1/GPa
  s.K = 19.8;
  return s;
}

std::map<std::pair<long, long>, int> node_keys(const TaylorHoodSpace& space, double scale) {
  std::map<std::pair<long, long>, int> keys;
  for (int n = 0; n < space.node_count(); ++n) {
    const Eigen::Vector2d x = space.node_position(n);
    keys[{std::lround(x.x() * scale), std::lround(x.y() * scale)}] = n;
  }
  return keys;
}

}  // namespace

TEST_CASE("injection solution is symmetric under the diagonal swap") {
  const int n = 8;
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(n));
  BiotScenario scn = make_injection_scenario(mesh);
  scn.sample = mms_reference_sample();
  const BiotSolver solver(scn);
  const FieldSolution last = solver.solve_transient().back();
  const TaylorHoodSpace& space = solver.space();

  const auto keys = node_keys(space, 4.0 * n);
  const double pscale = last.p.cwiseAbs().maxCoeff();
  CHECK(pscale > 0.0);
  for (int v = 0; v < mesh->vertex_count(); ++v) {
    const Eigen::Vector2d x = mesh->vertices[static_cast<std::size_t>(v)];
    const auto it = keys.find({std::lround(x.y() * 4.0 * n), std::lround(x.x() * 4.0 * n)});
    REQUIRE(it != keys.end());
    CHECK(std::abs(last.p(v) - last.p(it->second)) <= 1e-8);
  }
  const double uscale = last.u.cwiseAbs().maxCoeff();
  for (int node = 0; node < space.node_count(); ++node) {
    const Eigen::Vector2d x = space.node_position(node);
    const auto it = keys.find({std::lround(x.y() * 4.0 * n), std::lround(x.x() * 4.0 * n)});
    if (it == keys.end()) continue;  // midpoints of swapped edges always exist; guard anyway
    CHECK(std::abs(last.u(2 * node + 0) - last.u(2 * it->second + 1)) <= 1e-8 * std::max(1.0, uscale));
  }
}

TEST_CASE("injection pressure peaks at the source and dilates the domain") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(8));
  BiotScenario scn = make_injection_scenario(mesh);
  scn.sample = mms_reference_sample();
  const BiotSolver solver(scn);
  const FieldSolution last = solver.solve_transient().back();
  Eigen::Index argmax = 0;
  last.p.maxCoeff(&argmax);
  const Eigen::Vector2d xmax = mesh->vertices[static_cast<std::size_t>(argmax)];
  CHECK((xmax - Eigen::Vector2d(0.25, 0.25)).norm() <= 0.2);
  CHECK(last.p.maxCoeff() > 0.0);
}

TEST_CASE("footing first-step pressure under the load does not oscillate in sign") {
  const int n = 10;
  auto mesh = std::make_shared<TriMesh>(make_footing_mesh(n));
  BiotScenario scn = make_footing_scenario(mesh);
  scn.sample = mms_reference_sample();
  const BiotSolver solver(scn);
  const FieldSolution first = solver.step(solver.initial_state(), scn.dt());

  // Cell-center row directly beneath the top boundary, within the load span.
  double pmax = 0.0;
  std::vector<double> row;
  for (int v = 0; v < mesh->vertex_count(); ++v) {
    const Eigen::Vector2d x = mesh->vertices[static_cast<std::size_t>(v)];
    pmax = std::max(pmax, std::abs(first.p(v)));
    if (std::abs(x.y() - (1.0 - 0.5 / n)) < 1e-12 && x.x() >= 0.3 && x.x() <= 0.7)
      row.push_back(first.p(v));
  }
  REQUIRE(row.size() >= 4);
  for (double p : row) CHECK(p >= -1e-8 * pmax);  // compression pressure, no sign flips

  // Maximum pressure sits in the interior under the load.
  Eigen::Index argmax = 0;
  first.p.maxCoeff(&argmax);
  const Eigen::Vector2d xmax = mesh->vertices[static_cast<std::size_t>(argmax)];
  CHECK(xmax.y() < 1.0);
  CHECK(xmax.y() > 0.3);
  CHECK(xmax.x() > 0.2);
  CHECK(xmax.x() < 0.8);
}

TEST_CASE("footing pressure stays one-signed in the low-permeability stiff corner") {
  // Small kappa with small c0 is the nearly undrained regime where unstable
  // pairs produce checkerboard pressures; the inf-sup stable pair must not.
  const int n = 10;
  auto mesh = std::make_shared<TriMesh>(make_footing_mesh(n));
  BiotScenario scn = make_footing_scenario(mesh);
  const std::array<double, 4> corner = {1.0, 1.0, -1.0, -1.0};  // stiff, alpha low, kappa min
  scn.sample = sample_params(corner, UncertaintyModel::sand_kpa());
  CHECK(scn.sample.kappa == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(scn.sample.c0 < 1e-3);
  const BiotSolver solver(scn);
  const FieldSolution first = solver.step(solver.initial_state(), scn.dt());
  const double pmax = first.p.cwiseAbs().maxCoeff();
  for (int v = 0; v < mesh->vertex_count(); ++v) {
    const Eigen::Vector2d x = mesh->vertices[static_cast<std::size_t>(v)];
    if (std::abs(x.y() - (1.0 - 0.5 / n)) < 1e-12 && x.x() >= 0.3 && x.x() <= 0.7)
      CHECK(first.p(v) >= -1e-8 * pmax);
  }
}

TEST_CASE("two-well steady pressure is monotone between the wells") {
  auto mesh = std::make_shared<TriMesh>(
      make_two_well_mesh(4.0, 1.0, 20, 5, {0.8, 0.4, 1.2, 0.6}, {2.8, 0.4, 3.2, 0.6}));
  BiotScenario scn = make_two_well_scenario(mesh, -1.0e-4, 1.0e-4, 1.0, 10);
  scn.sample = rock_sample();
  const BiotSolver solver(scn);
  const FieldSolution last = solver.solve_transient().back();

  // Hole-boundary pressures are Dirichlet-exact.
  for (const auto& be : mesh->boundary_edges) {
    if (be.tag == boundary_tag::hole1) CHECK(last.p(be.v0) == -1.0e-4);
    if (be.tag == boundary_tag::hole2) CHECK(last.p(be.v0) == 1.0e-4);
  }

  // Sample the cell-center line y = 0.5 between the wells.
  std::vector<std::pair<double, double>> line;
  for (int v = 0; v < mesh->vertex_count(); ++v) {
    const Eigen::Vector2d x = mesh->vertices[static_cast<std::size_t>(v)];
    if (std::abs(x.y() - 0.5) < 1e-12 && x.x() > 1.2 && x.x() < 2.8) line.emplace_back(x.x(), last.p(v));
  }
  std::sort(line.begin(), line.end());
  REQUIRE(line.size() >= 6);
  for (std::size_t i = 1; i < line.size(); ++i)
    CHECK(line[i].second >= line[i - 1].second - 1e-12 * 1e-4);
}

TEST_CASE("two-well solution respects the mirror symmetry of the data") {
  const int nx = 20, ny = 5;
  auto mesh = std::make_shared<TriMesh>(
      make_two_well_mesh(4.0, 1.0, nx, ny, {0.8, 0.4, 1.2, 0.6}, {2.8, 0.4, 3.2, 0.6}));
  BiotScenario scn = make_two_well_scenario(mesh, -1.0e-4, 1.0e-4, 1.0, 10);
  scn.sample = rock_sample();
  const BiotSolver solver(scn);
  const FieldSolution last = solver.solve_transient().back();
  const TaylorHoodSpace& space = solver.space();

  // Quarter-cell key lattice: dx = dy = 0.2, all node coordinates are
  // multiples of 0.05, so 20 keys per unit length.
  (void)ny;
  const auto keys = node_keys(space, 20.0);
  const double uscale = last.u.cwiseAbs().maxCoeff();

  // Antisymmetric pressure data: p and the vertical displacement are
  // antisymmetric under x -> 4 - x, the horizontal displacement symmetric,
  // so u2 (and p) vanish on the centerline.
  int centerline_nodes = 0;
  bool mirrors_complete = true;
  for (int node = 0; node < space.node_count(); ++node) {
    const Eigen::Vector2d x = space.node_position(node);
    const long kx = std::lround(x.x() * 20.0);
    const long ky = std::lround(x.y() * 20.0);
    const auto mirror = keys.find({80 - kx, ky});
    if (mirror == keys.end()) {
      mirrors_complete = false;
      continue;
    }
    CHECK(std::abs(last.u(2 * node + 0) - last.u(2 * mirror->second + 0)) <= 1e-6 * uscale);
    CHECK(std::abs(last.u(2 * node + 1) + last.u(2 * mirror->second + 1)) <= 1e-6 * uscale);
    if (kx == 40) {
      ++centerline_nodes;
      CHECK(std::abs(last.u(2 * node + 1)) <= 1e-6 * uscale);
    }
  }
  CHECK(mirrors_complete);
  CHECK(centerline_nodes > 0);

  const double pscale = last.p.cwiseAbs().maxCoeff();
  for (int v = 0; v < mesh->vertex_count(); ++v) {
    const Eigen::Vector2d x = mesh->vertices[static_cast<std::size_t>(v)];
    const auto mirror = keys.find({80 - std::lround(x.x() * 20.0), std::lround(x.y() * 20.0)});
    REQUIRE(mirror != keys.end());
    CHECK(std::abs(last.p(v) + last.p(mirror->second)) <= 1e-6 * pscale);
  }
}

TEST_CASE("pressure scaling: doubling the well pressures doubles the solution") {
  auto mesh = std::make_shared<TriMesh>(
      make_two_well_mesh(4.0, 1.0, 20, 5, {0.8, 0.4, 1.2, 0.6}, {2.8, 0.4, 3.2, 0.6}));
  const PoroelasticSample s = rock_sample();
  BiotScenario a = make_two_well_scenario(mesh, -1.0e-4, 1.0e-4, 1.0, 5);
  BiotScenario b = make_two_well_scenario(mesh, -2.0e-4, 2.0e-4, 1.0, 5);
  a.sample = b.sample = s;
  const FieldSolution la = BiotSolver(a).solve_transient().back();
  const FieldSolution lb = BiotSolver(b).solve_transient().back();
  CHECK((lb.p - 2.0 * la.p).cwiseAbs().maxCoeff() <= 1e-12 * la.p.cwiseAbs().maxCoeff());
  CHECK((lb.u - 2.0 * la.u).cwiseAbs().maxCoeff() <= 1e-11 * la.u.cwiseAbs().maxCoeff());
}

TEST_CASE("any well-pressure pair superposes from the two elementary solutions") {
  auto mesh = std::make_shared<TriMesh>(
      make_two_well_mesh(4.0, 1.0, 20, 5, {0.8, 0.4, 1.2, 0.6}, {2.8, 0.4, 3.2, 0.6}));
  const PoroelasticSample s = rock_sample();
  auto solve_pair = [&](double p1, double p2) {
    BiotScenario scn = make_two_well_scenario(mesh, p1, p2, 1.0, 5);
    scn.sample = s;
    return BiotSolver(scn).solve_transient().back();
  };
  const FieldSolution e1 = solve_pair(1.0, 0.0);
  const FieldSolution e2 = solve_pair(0.0, 1.0);
  const FieldSolution direct = solve_pair(-3.0, 7.0);
  const Eigen::VectorXd pu = -3.0 * e1.u + 7.0 * e2.u;
  const Eigen::VectorXd pp = -3.0 * e1.p + 7.0 * e2.p;
  CHECK((direct.u - pu).cwiseAbs().maxCoeff() <= 1e-10 * direct.u.cwiseAbs().maxCoeff());
  CHECK((direct.p - pp).cwiseAbs().maxCoeff() <= 1e-10 * direct.p.cwiseAbs().maxCoeff());
}
