#pragma once

#include <span>
#include <string>

namespace porochaos {

/// Zimmerman lower bound on the Biot-Willis coefficient: 3 phi / (2 + phi).
double zimmerman_bound(double phi);

/// Bulk modulus K = 2 mu / d + lambda and Poisson ratio nu = lambda/(2(mu+lambda)).
struct DerivedModuli {
  double K;
  double nu;
};
DerivedModuli derived_moduli(double mu, double lambda, int spatial_dim);

struct C0Roots {
  double plus;
  double minus;
  double discriminant;
};

/// Both roots of the storage quadratic
///   K c0^2 - (alpha + alpha phi + phi K/K_f - phi) c0 + alpha^2 phi / K_f = 0,
/// computed with the sign-aware formula (larger-magnitude root first, the
/// other via Vieta) to avoid cancellation when phi/K_f is tiny. A slightly
/// negative discriminant within -1e-12 (relative to b^2) is clamped to zero;
/// anything below that is an internal error.
C0Roots solve_c0_roots(double K, double K_f, double phi, double alpha);

/// The admissible constrained specific storage coefficient c0^+ (larger root).
/// Postconditions checked: scaled quadratic residual <= 1e-12 and
/// c0 >= phi/K_f. Whether c0 >= alpha/K holds as well is equivalent to
/// K >= K_f and is reported per sample, not enforced here.
double solve_c0(double K, double K_f, double phi, double alpha);

/// Matrix bulk modulus from the Gassmann relation,
///   K_m = (K c0 - alpha^2) / (c0 (1 - alpha)).
/// alpha = 1 returns the incompressible-grain sentinel +infinity.
/// Throws std::domain_error if K c0 <= alpha^2 with alpha < 1 (K_m must be > 0).
double gassmann_matrix_modulus(double K, double c0, double alpha);

/// One realization of the poroelastic parameter set with its derived moduli.
struct PoroelasticSample {
  double mu = 0, lambda = 0, alpha = 0, kappa = 0;
  double phi = 0, K_f = 0;
  double c0 = 0;
  double K = 0, K_m = 0, K_d = 0, nu = 0;  // K_m is +inf when alpha == 1
  /// c0 K >= alpha, i.e. the matrix is at least as stiff as the bulk
  /// (K_m >= K). Holds exactly when K >= K_f; purely diagnostic.
  bool bulk_bound_ok = false;

  /// Biot tangent modulus M = K_m / (alpha - phi); diagnostic only.
  double tangent_modulus() const;
};

enum class TransformKind { Uniform, Log10Uniform };

/// Map from one canonical variable xi in [-1,1] to a physical coefficient:
/// either uniform on [lo, hi] or scale * 10^e with the exponent e uniform
/// on [exp_lo, exp_hi].
struct CoefficientTransform {
  TransformKind kind = TransformKind::Uniform;
  double lo = 0, hi = 0;
  double scale = 1, exp_lo = 0, exp_hi = 0;

  static CoefficientTransform uniform(double lo, double hi);
  static CoefficientTransform log10_uniform(double scale, double exp_lo, double exp_hi);

  double operator()(double xi) const;
  double min_value() const;
  double max_value() const;

  // Closed-form moments of the transformed variable.
  double mean() const;
  double second_moment() const;
  double variance() const { return second_moment() - mean() * mean(); }
  double cv() const;
};

/// One canonical variable per uncertain coefficient (mu, lambda, alpha,
/// kappa, in that xi order); porosity and fluid bulk modulus deterministic.
/// All values live in one consistent unit triple named by `units`; nothing
/// in the toolkit ever converts units.
struct UncertaintyModel {
  CoefficientTransform mu, lambda, alpha, kappa;
  double phi = 0.2;
  double K_f = 2200.0;
  int spatial_dim = 2;
  std::string units = "kPa-m-s";

  int dimension() const { return 4; }
  /// Rejects transforms that can produce alpha outside [3phi/(2+phi), 1].
  void validate() const;

  /// Water-saturated sand with 20% porosity, kPa-m-s units:
  /// mu = 10^(xi1+1) kPa, lambda = 2*10^(xi2+1) kPa, alpha uniform on
  /// [3phi/(2+phi), 1], kappa = 10^(xi4-1) m^2/(kPa s), K_f = 2200 kPa.
  static UncertaintyModel sand_kpa();

  /// Deep rock at reservoir scale, GPa-km-day units: mu = 3.75*10^((xi1+1)/2),
  /// lambda = 2.5*10^((xi2+1)/2), alpha = 10^((xi3-1)/2),
  /// kappa = 5*10^((xi4-3)/2), phi = 2/29, K_f = 2.2 GPa.
  static UncertaintyModel rock_gpa();
};

/// Apply the four transforms, fix phi and K_f, solve for c0 and fill the
/// derived moduli. Throws std::invalid_argument when a transform produces an
/// inadmissible alpha (model misconfiguration) and std::runtime_error when a
/// postcondition on the solved sample fails.
PoroelasticSample sample_params(std::span<const double> xi, const UncertaintyModel& model);

}  // namespace porochaos
