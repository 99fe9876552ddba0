#include "porochaos/coefficient_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace porochaos {

namespace {
constexpr double kLn10 = 2.302585092994045684;
}

double zimmerman_bound(double phi) {
  if (phi < 0.0 || phi > 1.0) throw std::invalid_argument("zimmerman_bound: phi in [0,1] required");
  return 3.0 * phi / (2.0 + phi);
}

DerivedModuli derived_moduli(double mu, double lambda, int spatial_dim) {
  if (mu <= 0.0 || lambda <= 0.0) throw std::invalid_argument("derived_moduli: mu, lambda > 0 required");
  if (spatial_dim != 2 && spatial_dim != 3)
    throw std::invalid_argument("derived_moduli: spatial dimension must be 2 or 3");
  return {2.0 * mu / spatial_dim + lambda, lambda / (2.0 * (mu + lambda))};
}

C0Roots solve_c0_roots(double K, double K_f, double phi, double alpha) {
  if (K <= 0.0 || K_f <= 0.0) throw std::invalid_argument("solve_c0: K, K_f > 0 required");
  if (phi <= 0.0 || phi >= 1.0) throw std::invalid_argument("solve_c0: phi in (0,1) required");
  if (alpha < zimmerman_bound(phi) - 1e-14 || alpha > 1.0 + 1e-14)
    throw std::invalid_argument("solve_c0: alpha outside [3phi/(2+phi), 1]");

  const double b = alpha + alpha * phi + phi * K / K_f - phi;  // > 0 under the alpha bound
  const double c = alpha * alpha * phi / K_f;
  double disc = b * b - 4.0 * K * c;
  if (disc < 0.0) {
    if (disc < -1e-12 * b * b)
      throw std::runtime_error("solve_c0: negative discriminant, inconsistent coefficients");
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  const double big = 0.5 * (b + sq);  // b > 0, so the stable companion is b + sqrt
  return {big / K, c / big, disc};
}

double solve_c0(double K, double K_f, double phi, double alpha) {
  const C0Roots roots = solve_c0_roots(K, K_f, phi, alpha);
  const double c0 = roots.plus;

  const double b = alpha + alpha * phi + phi * K / K_f - phi;
  const double c = alpha * alpha * phi / K_f;
  const double residual = K * c0 * c0 - b * c0 + c;
  const double scale = std::max({std::abs(K * c0 * c0), std::abs(b * c0), std::abs(c)});
  if (std::abs(residual) > 1e-12 * scale)
    throw std::runtime_error("solve_c0: quadratic residual exceeds tolerance");
  if (c0 < phi / K_f * (1.0 - 1e-12))
    throw std::runtime_error("solve_c0: root below phi/K_f storage floor");
  return c0;
}

double gassmann_matrix_modulus(double K, double c0, double alpha) {
  if (c0 <= 0.0) throw std::invalid_argument("gassmann_matrix_modulus: c0 > 0 required");
  if (alpha >= 1.0) return std::numeric_limits<double>::infinity();
  const double num = K * c0 - alpha * alpha;
  if (num <= 0.0)
    throw std::domain_error("gassmann_matrix_modulus: K c0 <= alpha^2 leaves no positive matrix modulus");
  return num / (c0 * (1.0 - alpha));
}

double PoroelasticSample::tangent_modulus() const { return K_m / (alpha - phi); }

CoefficientTransform CoefficientTransform::uniform(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("uniform transform: lo <= hi required");
  CoefficientTransform t;
  t.kind = TransformKind::Uniform;
  t.lo = lo;
  t.hi = hi;
  return t;
}

CoefficientTransform CoefficientTransform::log10_uniform(double scale, double exp_lo, double exp_hi) {
  if (!(exp_lo <= exp_hi)) throw std::invalid_argument("log10 transform: exp_lo <= exp_hi required");
  if (scale <= 0.0) throw std::invalid_argument("log10 transform: scale > 0 required");
  CoefficientTransform t;
  t.kind = TransformKind::Log10Uniform;
  t.scale = scale;
  t.exp_lo = exp_lo;
  t.exp_hi = exp_hi;
  return t;
}

double CoefficientTransform::operator()(double xi) const {
  if (kind == TransformKind::Uniform)
    return 0.5 * (hi + lo) + 0.5 * (hi - lo) * xi;
  const double e = 0.5 * (exp_hi + exp_lo) + 0.5 * (exp_hi - exp_lo) * xi;
  return scale * std::pow(10.0, e);
}

double CoefficientTransform::min_value() const { return (*this)(-1.0); }
double CoefficientTransform::max_value() const { return (*this)(1.0); }

double CoefficientTransform::mean() const {
  if (kind == TransformKind::Uniform) return 0.5 * (lo + hi);
  const double w = exp_hi - exp_lo;
  if (w == 0.0) return scale * std::pow(10.0, exp_lo);
  return scale * (std::pow(10.0, exp_hi) - std::pow(10.0, exp_lo)) / (w * kLn10);
}

double CoefficientTransform::second_moment() const {
  if (kind == TransformKind::Uniform) {
    const double m = mean();
    return m * m + (hi - lo) * (hi - lo) / 12.0;
  }
  const double w = exp_hi - exp_lo;
  if (w == 0.0) {
    const double m = mean();
    return m * m;
  }
  return scale * scale * (std::pow(10.0, 2.0 * exp_hi) - std::pow(10.0, 2.0 * exp_lo)) /
         (2.0 * w * kLn10);
}

double CoefficientTransform::cv() const { return std::sqrt(variance()) / mean(); }

void UncertaintyModel::validate() const {
  if (phi <= 0.0 || phi >= 1.0) throw std::invalid_argument("model: phi in (0,1) required");
  if (K_f <= 0.0) throw std::invalid_argument("model: K_f > 0 required");
  if (mu.min_value() <= 0.0 || lambda.min_value() <= 0.0 || kappa.min_value() <= 0.0)
    throw std::invalid_argument("model: mu, lambda, kappa must stay positive");
  const double amin = zimmerman_bound(phi);
  if (alpha.min_value() < amin - 1e-14 || alpha.max_value() > 1.0 + 1e-14)
    throw std::invalid_argument("model: alpha transform leaves [3phi/(2+phi), 1]");
}

UncertaintyModel UncertaintyModel::sand_kpa() {
  UncertaintyModel m;
  m.phi = 0.2;
  m.K_f = 2200.0;
  m.units = "kPa-m-s";
  m.mu = CoefficientTransform::log10_uniform(1.0, 0.0, 2.0);
  m.lambda = CoefficientTransform::log10_uniform(2.0, 0.0, 2.0);
  m.alpha = CoefficientTransform::uniform(zimmerman_bound(m.phi), 1.0);
  m.kappa = CoefficientTransform::log10_uniform(1.0, -2.0, 0.0);
  return m;
}

UncertaintyModel UncertaintyModel::rock_gpa() {
  UncertaintyModel m;
  m.phi = 2.0 / 29.0;
  m.K_f = 2.2;
  m.units = "GPa-km-day";
  m.mu = CoefficientTransform::log10_uniform(3.75, 0.0, 1.0);
  m.lambda = CoefficientTransform::log10_uniform(2.5, 0.0, 1.0);
  m.alpha = CoefficientTransform::log10_uniform(1.0, -1.0, 0.0);
  m.kappa = CoefficientTransform::log10_uniform(5.0, -2.0, -1.0);
  return m;
}

PoroelasticSample sample_params(std::span<const double> xi, const UncertaintyModel& model) {
  if (static_cast<int>(xi.size()) != model.dimension())
    throw std::invalid_argument("sample_params: xi dimension mismatch");

  PoroelasticSample s;
  s.mu = model.mu(xi[0]);
  s.lambda = model.lambda(xi[1]);
  s.alpha = model.alpha(xi[2]);
  s.kappa = model.kappa(xi[3]);
  s.phi = model.phi;
  s.K_f = model.K_f;

  const double amin = zimmerman_bound(s.phi);
  if (s.alpha < amin - 1e-14 || s.alpha > 1.0 + 1e-14)
    throw std::invalid_argument("sample_params: alpha outside the Zimmerman-admissible range");
  s.alpha = std::min(s.alpha, 1.0);

  const DerivedModuli dm = derived_moduli(s.mu, s.lambda, model.spatial_dim);
  s.K = dm.K;
  s.nu = dm.nu;
  s.c0 = solve_c0(s.K, s.K_f, s.phi, s.alpha);

  if (s.alpha == 1.0) {
    // Incompressible grains: c0 = max(1/K, phi/K_f) from the factorized
    // quadratic; K_d follows from the limit K_d -> K - 1/c0.
    s.K_m = std::numeric_limits<double>::infinity();
    s.K_d = (1.0 / s.K >= s.phi / s.K_f) ? 0.0 : s.K - s.K_f / s.phi;
  } else {
    s.K_m = gassmann_matrix_modulus(s.K, s.c0, s.alpha);
    s.K_d = (1.0 - s.alpha) * s.K_m;
  }

  const double gassmann_residual = s.alpha * s.alpha - s.c0 * (s.K - s.K_d);
  if (std::abs(gassmann_residual) > 1e-10 * s.alpha * s.alpha)
    throw std::runtime_error("sample_params: Gassmann residual exceeds tolerance");

  s.bulk_bound_ok = s.c0 * s.K >= s.alpha * (1.0 - 1e-12);
  return s;
}

}  // namespace porochaos
