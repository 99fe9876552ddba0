#include "porochaos/mms.hpp"

#include <cmath>

#include "porochaos/tri_quadrature.hpp"

namespace porochaos {

PoroelasticSample mms_reference_sample() {
  PoroelasticSample s;
  s.mu = 10.0;
  s.lambda = 20.0;
  s.alpha = 0.6;
  s.kappa = 0.1;
  s.c0 = 0.02;
  s.phi = 0.2;
  s.K_f = 2200.0;
  s.K = 30.0;
  return s;
}

ManufacturedCase mms_trig(const PoroelasticSample& s) {
  const double pi = M_PI;
  const double mu = s.mu, lam = s.lambda, alpha = s.alpha, kappa = s.kappa, c0 = s.c0;
  ManufacturedCase mms;
  mms.u1 = [pi](const Eigen::Vector2d& x, double t) {
    return t * std::sin(pi * x.x()) * std::sin(pi * x.y());
  };
  mms.u2 = [pi](const Eigen::Vector2d& x, double t) {
    return t * std::sin(2.0 * pi * x.x()) * std::sin(pi * x.y());
  };
  mms.p = [pi](const Eigen::Vector2d& x, double t) {
    return t * std::sin(pi * x.x()) * std::sin(2.0 * pi * x.y());
  };
  mms.body_force = [=](const Eigen::Vector2d& xv, double t) {
    const double x = xv.x(), y = xv.y();
    const double sx = std::sin(pi * x), cx = std::cos(pi * x);
    const double sy = std::sin(pi * y), cy = std::cos(pi * y);
    const double s2x = std::sin(2.0 * pi * x), c2x = std::cos(2.0 * pi * x);
    const double s2y = std::sin(2.0 * pi * y), c2y = std::cos(2.0 * pi * y);
    const double pi2 = pi * pi;
    const double u1xx = -t * pi2 * sx * sy;
    const double u1yy = -t * pi2 * sx * sy;
    const double u1xy = t * pi2 * cx * cy;
    const double u2xx = -4.0 * t * pi2 * s2x * sy;
    const double u2yy = -t * pi2 * s2x * sy;
    const double u2xy = 2.0 * t * pi2 * c2x * cy;
    const double div_sigma_1 = (2.0 * mu + lam) * u1xx + mu * u1yy + (mu + lam) * u2xy;
    const double div_sigma_2 = (mu + lam) * u1xy + mu * u2xx + (2.0 * mu + lam) * u2yy;
    const double px = t * pi * cx * s2y;
    const double py = 2.0 * t * pi * sx * c2y;
    return Eigen::Vector2d(-div_sigma_1 + alpha * px, -div_sigma_2 + alpha * py);
  };
  mms.fluid_source = [=](const Eigen::Vector2d& xv, double t) {
    const double x = xv.x(), y = xv.y();
    const double dt_p = std::sin(pi * x) * std::sin(2.0 * pi * y);
    const double dt_div_u = pi * std::cos(pi * x) * std::sin(pi * y) +
                            pi * std::sin(2.0 * pi * x) * std::cos(pi * y);
    const double lap_p = -5.0 * pi * pi * t * std::sin(pi * x) * std::sin(2.0 * pi * y);
    return c0 * dt_p + alpha * dt_div_u - kappa * lap_p;
  };
  return mms;
}

ManufacturedCase mms_poly_space(const PoroelasticSample& s, int time_power) {
  const double mu = s.mu, alpha = s.alpha, c0 = s.c0;
  auto tau = [time_power](double t) { return time_power == 1 ? t : t * t; };
  auto dtau = [time_power](double t) { return time_power == 1 ? 1.0 : 2.0 * t; };
  ManufacturedCase mms;
  mms.u1 = [=](const Eigen::Vector2d& x, double t) { return tau(t) * x.y() * x.y(); };
  mms.u2 = [=](const Eigen::Vector2d& x, double t) { return tau(t) * x.x() * x.x(); };
  mms.p = [=](const Eigen::Vector2d& x, double t) {
    return tau(t) * (1.0 + 2.0 * x.x() - x.y());
  };
  mms.body_force = [=](const Eigen::Vector2d&, double t) {
    return Eigen::Vector2d(-2.0 * mu * tau(t) + 2.0 * alpha * tau(t),
                           -2.0 * mu * tau(t) - alpha * tau(t));
  };
  mms.fluid_source = [=](const Eigen::Vector2d& x, double t) {
    return c0 * dtau(t) * (1.0 + 2.0 * x.x() - x.y());
  };
  return mms;
}

BiotScenario make_mms_scenario(std::shared_ptr<const TriMesh> mesh, const PoroelasticSample& sample,
                               const ManufacturedCase& mms, double t_final, int steps) {
  BiotScenario scn;
  scn.mesh = std::move(mesh);
  scn.sample = sample;
  scn.t_final = t_final;
  scn.steps = steps;
  scn.body_force = mms.body_force;
  scn.fluid_source = mms.fluid_source;
  scn.initial_u1 = mms.u1;
  scn.initial_u2 = mms.u2;
  scn.initial_p = mms.p;
  BoundaryCondition dirichlet;
  dirichlet.u1 = mms.u1;
  dirichlet.u2 = mms.u2;
  dirichlet.p = mms.p;
  for (int tag : {boundary_tag::bottom, boundary_tag::right, boundary_tag::top, boundary_tag::left})
    scn.bcs[tag] = dirichlet;
  return scn;
}

MmsErrors mms_errors(const TaylorHoodSpace& space, const ManufacturedCase& mms,
                     const FieldSolution& state) {
  const TriMesh& mesh = space.mesh();
  const TriQuadRule& rule = tri_rule_degree6();
  double eu2 = 0.0, ep2 = 0.0;
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const TriGeometry geo = tri_geometry(mesh, t);
    const auto nodes = space.element_nodes(t);
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
    for (const auto& qp : rule.points) {
      const double w = qp.weight * geo.area;
      const Eigen::Vector2d x = geo.point(qp.bary);
      const auto shapes = TaylorHoodSpace::p2_values(qp.bary);
      double u1h = 0.0, u2h = 0.0, ph = 0.0;
      for (int a = 0; a < 6; ++a) {
        u1h += shapes[static_cast<std::size_t>(a)] * state.u(2 * nodes[static_cast<std::size_t>(a)] + 0);
        u2h += shapes[static_cast<std::size_t>(a)] * state.u(2 * nodes[static_cast<std::size_t>(a)] + 1);
      }
      for (int j = 0; j < 3; ++j)
        ph += qp.bary[static_cast<std::size_t>(j)] * state.p(tri[static_cast<std::size_t>(j)]);
      const double du1 = u1h - mms.u1(x, state.time);
      const double du2 = u2h - mms.u2(x, state.time);
      const double dp = ph - mms.p(x, state.time);
      eu2 += w * (du1 * du1 + du2 * du2);
      ep2 += w * dp * dp;
    }
  }
  return {std::sqrt(eu2), std::sqrt(ep2)};
}

}  // namespace porochaos
