#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "extentlab/types.hpp"

namespace extentlab {

// Daily-maximum temperature series for one station over the study layout.
// Storage is a dense (n_years x season_length) row-major array with NaN for
// missing days; temperatures are degrees Celsius and must sit inside loose
// physical sanity bounds.
class StationSeries {
public:
    static constexpr double kMinTempC = -30.0;
    static constexpr double kMaxTempC = 55.0;

    StationSeries(Site site, const SeasonConfig& season);

    const Site& site() const { return site_; }
    const SeasonConfig& season() const { return season_; }

    bool has(int t, int l) const { return std::isfinite(values_[offset(t, l)]); }
    double value(int t, int l) const { return values_[offset(t, l)]; }

    // Throws ValidationError on non-finite or out-of-bounds temperatures.
    void set(int t, int l, double tmax_c);
    void set_missing(int t, int l) {
        values_[offset(t, l)] = std::numeric_limits<double>::quiet_NaN();
    }

    std::size_t n_observed() const;
    std::size_t n_missing() const { return values_.size() - n_observed(); }
    std::size_t n_slots() const { return values_.size(); }

private:
    std::size_t offset(int t, int l) const;

    Site site_;
    SeasonConfig season_;
    std::vector<double> values_;
};

}  // namespace extentlab
