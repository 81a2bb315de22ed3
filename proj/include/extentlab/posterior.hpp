#pragma once

#include <map>
#include <string>
#include <vector>

#include "extentlab/model.hpp"

namespace extentlab {

// Everything generation needs to reuse a fitted model, plus provenance.
struct StoreInfo {
    SeasonConfig season;
    std::vector<Site> sites;
    double t_center = 0.0;
    double decay = 0.0;        // 1/km, fixed at ingestion
    double proj_ref_lat = 0.0; // projection latitude used for all distances
    uint64_t seed = 0;
    int n_chains = 1;
    int n_iter = 0;
    int burn_in = 0;
    int thin = 1;
    // Free-form run statistics (acceptance rates etc.), serialized with the store.
    std::map<std::string, double> stats;
};

// Posterior draws in a flat (n_draws x n_scalars) matrix. Scalar layout:
//   beta0, alpha, beta_sin, beta_cos, beta_elev,
//   b0[i] (n), a[i] (n), psi[t] (T), eta[i][t] (n*T, site-major),
//   zrho[i] (n), zsigma[i] (n), zrho_mean, zsigma_mean,
//   var_b0, var_a, var_psi, var_eta, var_zrho, var_zsigma, var_eps0.
// Draws from multiple chains are concatenated in chain order.
class PosteriorStore {
public:
    PosteriorStore(StoreInfo info, Matrix draws);  // validates every draw

    static int n_scalars(int n_sites, int n_years);
    static std::vector<std::string> scalar_names(const std::vector<Site>& sites, int n_years);
    static Vector pack(const ModelParameters& p);
    static ModelParameters unpack_row(const Vector& row, int n_sites, int n_years);

    const StoreInfo& info() const { return info_; }
    const Matrix& draws() const { return draws_; }
    int n_draws() const { return static_cast<int>(draws_.rows()); }
    int n_sites() const { return static_cast<int>(info_.sites.size()); }
    int n_years() const { return info_.season.n_years; }
    int draws_per_chain() const { return n_draws() / info_.n_chains; }

    ModelParameters params(int draw) const;
    const std::vector<std::string>& names() const { return names_; }

    void save(const std::string& path) const;
    static PosteriorStore load(const std::string& path);
    void export_csv(const std::string& path) const;

private:
    StoreInfo info_;
    Matrix draws_;
    std::vector<std::string> names_;
};

}  // namespace extentlab
