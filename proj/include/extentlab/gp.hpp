#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "extentlab/rng.hpp"
#include "extentlab/types.hpp"

namespace extentlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Small-domain equirectangular projection: distances in km with longitudes
// scaled by cos(reference latitude). The reference latitude is fixed once from
// the station set and reused for all station/grid distance builds so observed
// and new-site distances share one geometry.
struct Projection {
    double ref_lat_deg = 0.0;
    static constexpr double kEarthRadiusKm = 6371.0088;

    static Projection from_sites(const std::vector<Site>& sites);  // mean latitude
    double distance_km(const Site& a, const Site& b) const;
};

Matrix distance_matrix(const std::vector<Site>& rows, const std::vector<Site>& cols,
                       const Projection& proj);
Matrix distance_matrix(const std::vector<Site>& sites, const Projection& proj);  // symmetric

// Spatial decay from the maximum pairwise distance: phi = 3 / d_max, giving
// correlation e^-3 ~ 0.05 at the domain diameter. Fixed at ingestion; never
// re-estimated. Throws ValidationError when d_max <= 0 (fewer than two
// distinct sites).
double max_pairwise_distance(const Matrix& dist);
double decay_from_dmax(double d_max);

// Stationary isotropic exponential-covariance GP.
struct GpSpec {
    double mean = 0.0;
    double variance = 1.0;
    double decay = 1.0;  // phi, 1/km
};

Matrix exp_cov(const Matrix& dist, const GpSpec& spec);  // variance * exp(-phi * d)

// Lower-Cholesky factor of a PSD matrix. Pivots within noise of zero become
// exact zero columns (so degenerate directions sample exactly at the mean);
// genuinely negative pivots trigger a jitter ladder (1e-10 .. 1e-6 times the
// diagonal scale) and finally NumericalError naming `label`.
Matrix psd_cholesky(const Matrix& cov, const std::string& label, double* jitter_used = nullptr);

// Draw from N(mean, cov). Zero covariance returns the mean exactly.
Vector mvn_sample(const Vector& mean, const Matrix& cov, RngStream& rng,
                  const std::string& label);

// Conditional GP at new sites given observed values (simple kriging with known
// mean/variance/decay). Returns the full conditional law. Exact at coincident
// sites: conditional mean equals the observed value, conditional variance ~ 0.
struct KrigeResult {
    Vector mean;
    Matrix cov;
};
KrigeResult krige_conditional(const Matrix& dist_obs, const Matrix& dist_cross,
                              const Matrix& dist_new, const Vector& obs_values,
                              const GpSpec& spec);

// Convenience overload building distances from site lists with one projection.
KrigeResult krige_conditional(const std::vector<Site>& obs_sites, const Vector& obs_values,
                              const std::vector<Site>& new_sites, const GpSpec& spec,
                              const Projection& proj);

// Decay-only kriging plan in correlation space. All four GP fields share the
// same decay, so the expensive factorizations happen once and every
// field/draw/replicate reuses them; the field variance scales in afterwards.
struct KrigingPlan {
    Matrix weights;    // n_obs x n_new, R_obs^-1 R_cross
    Matrix chol_cond;  // n_new x n_new lower factor of conditional correlation
    double jitter = 0.0;
};
KrigingPlan make_kriging_plan(const Matrix& dist_obs, const Matrix& dist_cross,
                              const Matrix& dist_new, double decay);
Vector plan_conditional_mean(const KrigingPlan& plan, double field_mean,
                             const Vector& obs_values);
Vector plan_sample(const KrigingPlan& plan, const Vector& cond_mean, double variance,
                   RngStream& rng);

// AR(1) coefficient and error-variance link functions.
double rho_from_z(double z);       // (e^z - 1)/(e^z + 1); saturates to +-1 safely
double z_from_rho(double rho);     // log((1 + rho)/(1 - rho)); requires |rho| < 1
double sigma2_from_z(double z);    // exp(z)
double z_from_sigma2(double s2);   // log(s2); requires s2 > 0

}  // namespace extentlab
